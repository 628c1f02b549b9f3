//! Text recipes for groups:
//!
//! ```text
//! perm 5          # followed by one generator per line in cycle notation
//! (0 1 2 3 4)
//! (1 3 4 2)
//! ```
//!
//! or a single line `sdp m n r`, `meta m n r s`, `dp <id> <id>`, `sl23`.

use super::{
    group_direct_product, group_from_permutations, group_metacyclic, group_semidirect_cyclic, group_sl23, Group,
    GroupError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    Sdp { m: u32, n: u32, r: i64 },
    Meta { m: u32, n: u32, r: i64, s: i64 },
    Dp(String, String),
    Sl23,
}

impl Recipe {
    /// Builds the group. `resolve` turns the operands of `dp` into groups.
    pub fn build(&self, resolve: &dyn Fn(&str) -> Result<Group, GroupError>) -> Result<Group, GroupError> {
        match self {
            Recipe::Perm { degree, generators } => group_from_permutations(*degree, generators),
            Recipe::Sdp { m, n, r } => group_semidirect_cyclic(*m, *n, *r),
            Recipe::Meta { m, n, r, s } => group_metacyclic(*m, *n, *r, *s),
            Recipe::Dp(a, b) => group_direct_product(&resolve(a)?, &resolve(b)?),
            Recipe::Sl23 => Ok(group_sl23()),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn int<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T, GroupError> {
    tok.ok_or_else(|| GroupError::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| GroupError::Parse(format!("invalid {what}")))
}

pub fn parse_recipe(text: &str) -> Result<Recipe, GroupError> {
    let mut lines = text.lines().map(strip_comment).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| GroupError::Parse("empty group spec".into()))?;
    let mut toks = header.split_whitespace();
    let kind = toks.next().unwrap_or_default();
    let recipe = match kind {
        "perm" => {
            let degree: usize = int(toks.next(), "degree")?;
            let generators = lines.by_ref().map(|l| parse_cycles(l, degree)).collect::<Result<_, _>>()?;
            Recipe::Perm { degree, generators }
        }
        "sdp" => Recipe::Sdp { m: int(toks.next(), "m")?, n: int(toks.next(), "n")?, r: int(toks.next(), "r")? },
        "meta" => Recipe::Meta {
            m: int(toks.next(), "m")?,
            n: int(toks.next(), "n")?,
            r: int(toks.next(), "r")?,
            s: int(toks.next(), "s")?,
        },
        "dp" => {
            let a = toks.next().ok_or_else(|| GroupError::Parse("dp needs two ids".into()))?;
            let b = toks.next().ok_or_else(|| GroupError::Parse("dp needs two ids".into()))?;
            Recipe::Dp(a.to_string(), b.to_string())
        }
        "sl23" => Recipe::Sl23,
        other => return Err(GroupError::Parse(format!("unknown group kind `{other}`"))),
    };
    if toks.next().is_some() {
        return Err(GroupError::Parse(format!("trailing tokens in `{header}`")));
    }
    if let Some(extra) = lines.next() {
        return Err(GroupError::Parse(format!("unexpected line `{extra}`")));
    }
    Ok(recipe)
}

/// Parses `(0 1 2)(3 4)` into the permutation array of length `degree`.
fn parse_cycles(line: &str, degree: usize) -> Result<Vec<usize>, GroupError> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut moved = vec![false; degree];
    let mut rest = line.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| GroupError::Parse(format!("bad cycle notation `{line}`")))?;
        let points: Vec<usize> = body
            .0
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| GroupError::Parse(format!("bad point `{t}`"))))
            .collect::<Result<_, _>>()?;
        for (i, &p) in points.iter().enumerate() {
            if p >= degree || moved[p] {
                return Err(GroupError::InvalidPermutation(format!("point {p} in `{line}`")));
            }
            moved[p] = true;
            perm[p] = points[(i + 1) % points.len()];
        }
        rest = body.1.trim_start();
    }
    Ok(perm)
}
