//! Line-oriented suite files:
//!
//! ```text
//! # comment
//! [case four-points]
//! degrees=1,1,1,1
//! chi=2
//! n=1
//! dmax=3
//! ```
//!
//! `chi` defaults to 0 and `n` to 1; `degrees` and `dmax` are required.

use std::collections::BTreeSet;

use uquot_core::Config;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteCase {
    pub name: String,
    pub config: Config,
}

#[derive(Default)]
struct Pending {
    name: String,
    line: usize,
    degrees: Option<Vec<u32>>,
    chi: Option<u32>,
    n: Option<u32>,
    dmax: Option<u32>,
}

impl Pending {
    fn finish(self) -> Result<SuiteCase, String> {
        let ctx = |what: &str| format!("case {:?} (line {}): {what}", self.name, self.line);
        let degrees = self.degrees.ok_or_else(|| ctx("missing degrees"))?;
        let dmax = self.dmax.ok_or_else(|| ctx("missing dmax"))?;
        let config =
            Config::new(degrees, self.chi.unwrap_or(0), self.n.unwrap_or(1), dmax).map_err(|e| ctx(&e.to_string()))?;
        Ok(SuiteCase {
            name: self.name,
            config,
        })
    }
}

pub fn parse_u32_list(s: &str) -> Result<Vec<u32>, String> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("bad integer {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Err("empty list".into());
    }
    Ok(v)
}

pub fn parse_suite(text: &str) -> Result<Vec<SuiteCase>, String> {
    let mut cases = Vec::new();
    let mut names = BTreeSet::new();
    let mut current: Option<Pending> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let header = rest
                .strip_suffix(']')
                .ok_or_else(|| format!("line {lineno}: unterminated header"))?;
            let name = header
                .trim()
                .strip_prefix("case")
                .map(str::trim)
                .filter(|n| !n.is_empty())
                .ok_or_else(|| format!("line {lineno}: expected [case <name>]"))?;
            if !names.insert(name.to_string()) {
                return Err(format!("line {lineno}: duplicate case {name:?}"));
            }
            if let Some(p) = current.take() {
                cases.push(p.finish()?);
            }
            current = Some(Pending {
                name: name.to_string(),
                line: lineno,
                ..Pending::default()
            });
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {lineno}: expected key=value"))?;
        let case = current
            .as_mut()
            .ok_or_else(|| format!("line {lineno}: setting outside a [case] section"))?;
        let (key, value) = (key.trim(), value.trim());
        let int = || {
            value
                .parse::<u32>()
                .map_err(|_| format!("line {lineno}: bad integer {value:?}"))
        };
        match key {
            "degrees" => case.degrees = Some(parse_u32_list(value).map_err(|e| format!("line {lineno}: {e}"))?),
            "chi" => case.chi = Some(int()?),
            "n" => case.n = Some(int()?),
            "dmax" => case.dmax = Some(int()?),
            other => return Err(format!("line {lineno}: unknown key {other:?}")),
        }
    }
    if let Some(p) = current.take() {
        cases.push(p.finish()?);
    }
    if cases.is_empty() {
        return Err("suite has no cases".into());
    }
    Ok(cases)
}
