//! Text and JSON dumps of character tables, and the matching loader.

use serde::{Deserialize, Serialize};

use super::{CharError, CharacterTable};
use crate::cyclotomic::{render_short, Cyclotomic};
use crate::group::Group;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassInfo {
    pub size: usize,
    pub rep: usize,
    pub order: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableDump {
    pub group: String,
    pub order: usize,
    pub conductor: u32,
    pub classes: Vec<ClassInfo>,
    pub degrees: Vec<u32>,
    /// Entries rendered as `(a0, a1, …)@e`.
    pub rows: Vec<Vec<String>>,
}

impl CharacterTable {
    pub fn dump(&self, group_name: &str) -> TableDump {
        TableDump {
            group: group_name.to_string(),
            order: self.order,
            conductor: self.conductor,
            classes: (0..self.num_classes())
                .map(|k| ClassInfo { size: self.class_sizes[k], rep: self.class_reps[k], order: self.class_orders[k] })
                .collect(),
            degrees: self.degrees.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }

    pub fn to_json(&self, group_name: &str) -> String {
        serde_json::to_string_pretty(&self.dump(group_name)).expect("table dump serializes")
    }

    /// Aligned plain-text table with compact entries.
    pub fn to_text(&self, group_name: &str) -> String {
        let h = self.num_classes();
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push(std::iter::once("class".to_string()).chain((0..h).map(|k| format!("C{k}"))).collect());
        cells.push(std::iter::once("size".to_string()).chain(self.class_sizes.iter().map(|s| s.to_string())).collect());
        cells.push(
            std::iter::once("order".to_string()).chain(self.class_orders.iter().map(|s| s.to_string())).collect(),
        );
        for (i, row) in self.rows.iter().enumerate() {
            cells.push(std::iter::once(format!("χ{}", i + 1)).chain(row.iter().map(render_short)).collect());
        }
        let widths: Vec<usize> =
            (0..=h).map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = format!("{group_name}: order {}, {h} classes, conductor {}\n", self.order, self.conductor);
        for r in &cells {
            let line: Vec<String> = r.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// Rebuilds a table from a dump for the given group. The class data
    /// must agree with the group's own conjugacy classes; the entries are
    /// taken as given and then validated.
    pub fn from_dump(group: &Group, dump: &TableDump) -> Result<CharacterTable, CharError> {
        let part = group.conjugacy_classes();
        let bad = |m: String| CharError::Parse(m);
        if dump.order != group.order() || dump.classes.len() != part.len() {
            return Err(bad("table does not fit the group".into()));
        }
        for (k, c) in dump.classes.iter().enumerate() {
            if c.rep >= group.order() || group.class_of(c.rep) != k || c.size != part.size(k) {
                return Err(bad(format!("class {k} does not match the group")));
            }
        }
        if dump.rows.len() != part.len() || dump.degrees.len() != part.len() {
            return Err(bad("row count differs from class count".into()));
        }
        let rows = dump
            .rows
            .iter()
            .map(|r| {
                if r.len() != part.len() {
                    return Err(bad("ragged row".into()));
                }
                r.iter()
                    .map(|v| v.parse::<Cyclotomic>().map(|x| x.embed(dump.conductor)).map_err(|e| bad(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !dump.conductor.is_multiple_of(group.exponent()) {
            return Err(bad("conductor is not a multiple of the exponent".into()));
        }
        let table = CharacterTable {
            order: group.order(),
            conductor: dump.conductor,
            class_sizes: part.sizes(),
            class_reps: part.reps(),
            class_orders: part.reps().iter().map(|&x| group.element_order(x)).collect(),
            inverse_class: (0..part.len()).map(|k| part.inverse_class(k)).collect(),
            class_of: (0..group.order()).map(|x| group.class_of(x)).collect(),
            rows,
            degrees: dump.degrees.clone(),
        };
        table.validate()?;
        Ok(table)
    }

    pub fn from_json(group: &Group, json: &str) -> Result<CharacterTable, CharError> {
        let dump: TableDump = serde_json::from_str(json).map_err(|e| CharError::Parse(e.to_string()))?;
        Self::from_dump(group, &dump)
    }
}

#[cfg(test)]
mod tests {
    use crate::chars::character_table;
    use crate::group::{group_semidirect_cyclic, group_sl23};

    #[test]
    fn json_round_trip() {
        for g in [group_semidirect_cyclic(7, 6, 3).unwrap(), group_sl23()] {
            let t = character_table(&g).unwrap();
            let back = super::CharacterTable::from_json(&g, &t.to_json(g.name())).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn loader_rejects_corrupt_tables() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let t = character_table(&g).unwrap();
        let mut dump = t.dump("F20");
        dump.rows[4][1] = "(1, 0, 0, 0, 0, 0, 0, 0)@20".into();
        assert!(super::CharacterTable::from_dump(&g, &dump).is_err());
        let mut dump = t.dump("F20");
        dump.classes[1].size = 5;
        assert!(super::CharacterTable::from_dump(&g, &dump).is_err());
    }

    #[test]
    fn text_dump_mentions_every_row() {
        let g = group_semidirect_cyclic(5, 4, 3).unwrap();
        let text = character_table(&g).unwrap().to_text("F20");
        assert!(text.contains("χ5"));
        assert!(text
            .lines()
            .any(|l| l.trim_start().starts_with("χ5") && l.split_whitespace().skip(1).eq(["4", "-1", "0", "0", "0"])));
    }
}
