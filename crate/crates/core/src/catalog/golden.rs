use crate::chars::CharacterTable;
use crate::cyclotomic::Cyclotomic;

/// A character table as printed: class sizes, element orders and rows of
/// value tokens (`1`, `-1`, `i`, `-i`, `z3`, `z3^2`, `z6^5`, …).
#[derive(Debug, PartialEq, Eq)]
pub struct GoldenTable {
    pub class_sizes: &'static [usize],
    pub class_orders: &'static [u32],
    pub rows: &'static [&'static [&'static str]],
}

pub static F20_TABLE: GoldenTable = GoldenTable {
    class_sizes: &[1, 5, 5, 5, 4],
    class_orders: &[1, 2, 4, 4, 5],
    rows: &[
        &["1", "1", "1", "1", "1"],
        &["1", "1", "-1", "-1", "1"],
        &["1", "-1", "i", "-i", "1"],
        &["1", "-1", "-i", "i", "1"],
        &["4", "0", "0", "0", "-1"],
    ],
};

pub static F42_TABLE: GoldenTable = GoldenTable {
    class_sizes: &[1, 7, 7, 7, 7, 7, 6],
    class_orders: &[1, 2, 3, 3, 6, 6, 7],
    rows: &[
        &["1", "1", "1", "1", "1", "1", "1"],
        &["1", "-1", "1", "1", "-1", "-1", "1"],
        &["1", "1", "z3^2", "z3", "z3", "z3^2", "1"],
        &["1", "1", "z3", "z3^2", "z3^2", "z3", "1"],
        &["1", "-1", "z3", "z3^2", "z6", "z6^5", "1"],
        &["1", "-1", "z3^2", "z3", "z6^5", "z6", "1"],
        &["6", "0", "0", "0", "0", "0", "-1"],
    ],
};

/// Six elements of order 3 in SL(2,3).
pub static SL23_S: [&str; 6] =
    ["[[1,1],[0,1]]", "[[0,1],[2,2]]", "[[0,2],[1,2]]", "[[2,1],[2,0]]", "[[1,2],[0,1]]", "[[2,2],[1,0]]"];
/// Six elements of order 6 in SL(2,3).
pub static SL23_T: [&str; 6] =
    ["[[2,0],[1,2]]", "[[1,2],[1,0]]", "[[1,1],[2,0]]", "[[0,1],[2,1]]", "[[0,2],[1,1]]", "[[2,0],[2,2]]"];

/// Parses a table token: an integer, or an optionally negated root of
/// unity `i`, `zN` or `zN^k`.
pub fn parse_value(tok: &str) -> Option<Cyclotomic> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok),
    };
    let v = if let Ok(k) = body.parse::<i64>() {
        Cyclotomic::from_int(1, k)
    } else if body == "i" {
        Cyclotomic::root(4, 1)
    } else {
        let body = body.strip_prefix('z')?;
        let (n, k) = match body.split_once('^') {
            Some((n, k)) => (n.parse().ok()?, k.parse().ok()?),
            None => (body.parse().ok()?, 1),
        };
        Cyclotomic::root(n, k)
    };
    Some(if neg { -v } else { v })
}

impl GoldenTable {
    pub fn values(&self) -> Vec<Vec<Cyclotomic>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|t| parse_value(t).expect("well-formed golden token")).collect())
            .collect()
    }

    /// Finds a column bijection (respecting class sizes and orders) and a
    /// row bijection under which the computed table equals this one
    /// entry by entry. Returns (row map, column map) from printed to
    /// computed indices.
    pub fn matches(&self, table: &CharacterTable) -> Option<(Vec<usize>, Vec<usize>)> {
        let k = self.class_sizes.len();
        if table.num_classes() != k {
            return None;
        }
        let golden = self.values();
        let mut cols = Vec::with_capacity(k);
        let mut used = vec![false; k];
        self.assign(table, &golden, &mut cols, &mut used)
    }

    fn assign(
        &self,
        table: &CharacterTable,
        golden: &[Vec<Cyclotomic>],
        cols: &mut Vec<usize>,
        used: &mut [bool],
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let c = cols.len();
        let k = used.len();
        if c == k {
            return row_bijection(table, golden, cols).map(|rows| (rows, cols.clone()));
        }
        for j in 0..k {
            if used[j]
                || table.class_sizes()[j] != self.class_sizes[c]
                || table.class_orders()[j] != self.class_orders[c]
            {
                continue;
            }
            used[j] = true;
            cols.push(j);
            if let Some(found) = self.assign(table, golden, cols, used) {
                return Some(found);
            }
            cols.pop();
            used[j] = false;
        }
        None
    }
}

fn row_bijection(table: &CharacterTable, golden: &[Vec<Cyclotomic>], cols: &[usize]) -> Option<Vec<usize>> {
    let mut taken = vec![false; golden.len()];
    golden
        .iter()
        .map(|g| {
            let r = (0..table.rows().len())
                .find(|&r| !taken[r] && g.iter().zip(cols).all(|(v, &j)| table.rows()[r][j] == *v))?;
            taken[r] = true;
            Some(r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        assert_eq!(parse_value("-i"), Some(-Cyclotomic::root(4, 1)));
        assert_eq!(parse_value("z6^5"), Some(Cyclotomic::root(6, 5)));
        assert_eq!(parse_value("z3"), Some(Cyclotomic::root(3, 1)));
        assert_eq!(parse_value("-1"), Some(Cyclotomic::from_int(1, -1)));
        assert_eq!(parse_value("q"), None);
    }

    #[test]
    fn golden_tables_are_consistent() {
        for t in [&F20_TABLE, &F42_TABLE] {
            let v = t.values();
            let n: usize = t.class_sizes.iter().sum();
            // first column squares sum to the order
            let deg: i64 = v
                .iter()
                .map(|r| r[0].to_rational().unwrap().to_integer().try_into().unwrap_or(0i64))
                .map(|d: i64| d * d)
                .sum();
            assert_eq!(deg as usize, n);
        }
    }
}
