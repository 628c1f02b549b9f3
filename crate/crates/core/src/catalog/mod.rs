//! Embedded catalog: every non-abelian group of order at most 30 (the
//! order-16 family expanded to its nine members), the Frobenius group of
//! order 42, and a few abelian controls, with recipes and the published
//! BI/CI verdicts.

mod golden;

pub use golden::{parse_value, GoldenTable, F20_TABLE, F42_TABLE, SL23_S, SL23_T};

use crate::group::{parse_recipe, Group, GroupError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    /// SmallGroups-style identifier, or a plain name for the controls.
    pub label: &'static str,
    pub name: &'static str,
    pub recipe: &'static str,
    pub reference_bi: bool,
    pub reference_ci: bool,
    /// Whether the entry is a row of the published table of groups of
    /// order at most 30.
    pub in_table: bool,
    pub golden_table: Option<&'static GoldenTable>,
    /// Two connection sets given as matrix labels.
    pub golden_witnesses: Option<(&'static [&'static str], &'static [&'static str])>,
}

impl CatalogEntry {
    /// Order named in the label, when it is of the form `[n,k]`.
    pub fn labelled_order(&self) -> Option<usize> {
        self.label.strip_prefix('[')?.split(',').next()?.parse().ok()
    }

    pub fn build(&self) -> Result<Group, GroupError> {
        let recipe = parse_recipe(self.recipe)?;
        Ok(recipe.build(&build_group)?.with_name(self.label))
    }
}

const fn row(label: &'static str, name: &'static str, recipe: &'static str, bi: bool, ci: bool) -> CatalogEntry {
    CatalogEntry {
        label,
        name,
        recipe,
        reference_bi: bi,
        reference_ci: ci,
        in_table: true,
        golden_table: None,
        golden_witnesses: None,
    }
}

const fn control(label: &'static str, recipe: &'static str) -> CatalogEntry {
    CatalogEntry {
        label,
        name: label,
        recipe,
        reference_bi: true,
        reference_ci: true,
        in_table: false,
        golden_table: None,
        golden_witnesses: None,
    }
}

const Y: bool = true;
const N: bool = false;

static CATALOG: &[CatalogEntry] = &[
    control("C1", "sdp 1 1 1"),
    control("C2", "sdp 2 1 1"),
    control("C3", "sdp 3 1 1"),
    control("C4", "sdp 4 1 1"),
    control("C2xC2", "dp C2 C2"),
    control("C5", "sdp 5 1 1"),
    control("C6", "sdp 6 1 1"),
    control("C7", "sdp 7 1 1"),
    control("C9", "sdp 9 1 1"),
    row("[6,1]", "S3", "sdp 3 2 2", Y, Y),
    row("[8,3]", "D8", "sdp 4 2 3", N, N),
    row("[8,4]", "Q8", "meta 4 2 3 2", Y, Y),
    row("[10,1]", "D10", "sdp 5 2 4", Y, Y),
    row("[12,1]", "C3:C4", "sdp 3 4 2", Y, Y),
    row("[12,3]", "A4", "perm 4\n(0 1 2)\n(0 1)(2 3)", Y, Y),
    row("[12,4]", "D12", "sdp 6 2 5", N, N),
    row("[14,1]", "D14", "sdp 7 2 6", Y, Y),
    row("[16,3]", "(C4xC2):C2", "perm 8\n(4 5)\n(6 7)\n(0 1 2 3)(4 6)(5 7)", N, N),
    row("[16,4]", "C4:C4", "sdp 4 4 3", N, N),
    row("[16,6]", "C8:C2", "sdp 8 2 5", N, N),
    row("[16,7]", "D16", "sdp 8 2 7", N, N),
    row("[16,8]", "QD16", "sdp 8 2 3", N, N),
    row("[16,9]", "Q16", "meta 8 2 7 4", N, N),
    row("[16,11]", "C2xD8", "dp C2 [8,3]", N, N),
    row("[16,12]", "C2xQ8", "dp C2 [8,4]", N, N),
    row("[16,13]", "(C4xC2):C2 central", "perm 8\n(0 4)(1 5)(2 6)(3 7)\n(4 6)(5 7)\n(0 1 2 3)(4 5 6 7)", N, N),
    row("[18,1]", "D18", "sdp 9 2 8", Y, Y),
    row("[18,3]", "C3xS3", "dp C3 [6,1]", N, N),
    row("[18,4]", "(C3xC3):C2", "perm 6\n(0 1 2)\n(3 4 5)\n(1 2)(4 5)", Y, Y),
    row("[20,1]", "C5:C4", "sdp 5 4 4", Y, Y),
    CatalogEntry { golden_table: Some(&F20_TABLE), ..row("[20,3]", "C5:C4 (Frobenius)", "sdp 5 4 3", Y, N) },
    row("[20,4]", "D20", "sdp 10 2 9", N, N),
    row("[21,1]", "C7:C3", "sdp 7 3 2", Y, Y),
    row("[22,1]", "D22", "sdp 11 2 10", Y, Y),
    row("[24,1]", "C3:C8", "sdp 3 8 2", Y, Y),
    CatalogEntry { golden_witnesses: Some((&SL23_S, &SL23_T)), ..row("[24,3]", "SL(2,3)", "sl23", N, N) },
    row("[24,4]", "C3:Q8", "meta 12 2 11 6", N, N),
    row("[24,5]", "C4xS3", "dp C4 [6,1]", N, N),
    row("[24,6]", "D24", "sdp 12 2 11", N, N),
    row("[24,7]", "C2x(C3:C4)", "dp C2 [12,1]", N, N),
    row("[24,8]", "(C6xC2):C2", "perm 7\n(0 1 2 3)(4 5)\n(1 3)\n(4 5 6)", N, N),
    row("[24,10]", "C3xD8", "dp C3 [8,3]", N, N),
    row("[24,11]", "C3xQ8", "dp C3 [8,4]", N, N),
    row("[24,12]", "S4", "perm 4\n(0 1 2 3)\n(0 1)", N, N),
    row("[24,13]", "C2xA4", "dp C2 [12,3]", N, N),
    row("[24,14]", "C2xC2xS3", "dp C2xC2 [6,1]", N, N),
    row("[26,1]", "D26", "sdp 13 2 12", Y, Y),
    row("[27,3]", "Heisenberg(3)", "perm 9\n(0 1 2)(3 4 5)(6 7 8)\n(1 4 7)(2 8 5)", N, N),
    row("[27,4]", "C9:C3", "sdp 9 3 4", N, N),
    row("[28,1]", "C7:C4", "sdp 7 4 6", Y, Y),
    row("[28,3]", "D28", "sdp 14 2 13", N, N),
    row("[30,1]", "C5xS3", "dp C5 [6,1]", Y, Y),
    row("[30,2]", "C3xD10", "dp C3 [10,1]", Y, Y),
    row("[30,3]", "D30", "sdp 15 2 14", Y, Y),
    CatalogEntry {
        golden_table: Some(&F42_TABLE),
        in_table: false,
        ..row("[42,1]", "C7:C6 (Frobenius)", "sdp 7 6 3", Y, N)
    },
];

pub fn catalog_list() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn lookup(label: &str) -> Option<&'static CatalogEntry> {
    let key: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    CATALOG.iter().find(|e| e.label == key || e.name == key)
}

/// Builds a catalog group by label (or display name).
pub fn build_group(label: &str) -> Result<Group, GroupError> {
    lookup(label).ok_or_else(|| GroupError::UnknownId(label.to_string()))?.build()
}
