//! Published autocorrelation and complexity tables, as literal fixtures.
//!
//! Rows use the grouped format of [`crate::correlate::format_grouped`]:
//! quadruples `AC(4j-3..4j)` each closed by `;`.

use crate::correlate::{parse_grouped, AutocorrProfile};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub first: u64,
    pub last: u64,
    pub text: &'static str,
}

/// `AC(1..N-1)` for `k = 2`.
pub const TABLE1: &[TableRow] = &[
    TableRow {
        first: 1,
        last: 20,
        text: "-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 21,
        last: 40,
        text: "-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 41,
        last: 59,
        text: "-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4;",
    },
];

/// `AC(1..N-1)` for `k = 3`.
pub const TABLE2: &[TableRow] = &[
    TableRow {
        first: 1,
        last: 36,
        text: "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 37,
        last: 72,
        text: "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 73,
        last: 108,
        text: "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 109,
        last: 144,
        text: "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 145,
        last: 180,
        text: "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 181,
        last: 216,
        text: "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 217,
        last: 251,
        text: "-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4;",
    },
];

/// `AC(1..N-1)` for `k = 4`.
pub const TABLE3: &[TableRow] = &[
    TableRow {
        first: 1,
        last: 68,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 69,
        last: 136,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 137,
        last: 204,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 205,
        last: 272,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 273,
        last: 340,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 341,
        last: 408,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 409,
        last: 476,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 477,
        last: 544,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 545,
        last: 612,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 613,
        last: 680,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 681,
        last: 748,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 749,
        last: 816,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 817,
        last: 884,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 885,
        last: 952,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,-4;",
    },
    TableRow {
        first: 953,
        last: 1019,
        text: "-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;0,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,0,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4,4;-4,0,-4;",
    },
];

/// `AC(1..11)` for `k = 1`.
pub const EXAMPLE1_K1: [i64; 11] = [-4, 0, 0, 4, -4, 0, -4, 4, 0, 0, -4];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexityRow {
    pub k: u32,
    pub period: u64,
    /// Complexity measured by the table's authors, for their unstated field.
    pub actual: u64,
    pub bound: u64,
}

pub const TABLE4: [ComplexityRow; 8] = [
    ComplexityRow { k: 1, period: 12, actual: 8, bound: 6 },
    ComplexityRow { k: 2, period: 60, actual: 60, bound: 55 },
    ComplexityRow { k: 3, period: 252, actual: 250, bound: 240 },
    ComplexityRow { k: 4, period: 1020, actual: 1020, bound: 1020 },
    ComplexityRow { k: 5, period: 4092, actual: 4082, bound: 4072 },
    ComplexityRow { k: 6, period: 16380, actual: 16380, bound: 16367 },
    ComplexityRow { k: 7, period: 65532, actual: 65530, bound: 65504 },
    ComplexityRow { k: 8, period: 262140, actual: 262140, bound: 262123 },
];

/// The grouped table for `k` in `2..=4`.
pub fn autocorrelation_table(k: u32) -> Option<&'static [TableRow]> {
    match k {
        2 => Some(TABLE1),
        3 => Some(TABLE2),
        4 => Some(TABLE3),
        _ => None,
    }
}

pub fn complexity_row(k: u32) -> Option<ComplexityRow> {
    TABLE4.iter().copied().find(|r| r.k == k)
}

/// All values of a grouped table in `tau` order, checking the row ranges.
pub fn table_values(rows: &[TableRow]) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for row in rows {
        let vals = parse_grouped(row.text)?;
        if row.first != out.len() as u64 + 1 || vals.len() as u64 != row.last - row.first + 1 {
            return Err(Error::Parse(format!(
                "row {}-{} holds {} values",
                row.first,
                row.last,
                vals.len()
            )));
        }
        out.extend(vals);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellMismatch {
    pub tau: u64,
    pub expected: i64,
    pub measured: i64,
}

/// Cell-by-cell comparison of a profile against a table, `tau = 1..N-1`.
pub fn diff_table(rows: &[TableRow], profile: &AutocorrProfile) -> Result<Vec<CellMismatch>> {
    let expected = table_values(rows)?;
    let measured = profile.off_peak();
    if expected.len() != measured.len() {
        return Err(Error::LengthMismatch {
            what: "table cells vs off-peak values",
            expected: expected.len() as u64,
            actual: measured.len() as u64,
        });
    }
    Ok(expected
        .iter()
        .zip(measured)
        .enumerate()
        .filter(|(_, (e, m))| e != m)
        .map(|(i, (&expected, &measured))| CellMismatch {
            tau: i as u64 + 1,
            expected,
            measured,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        for (k, n) in [(2u32, 59usize), (3, 251), (4, 1019)] {
            let vals = table_values(autocorrelation_table(k).unwrap()).unwrap();
            assert_eq!(vals.len(), n);
            assert!(vals.iter().all(|v| [0, 4, -4].contains(v)));
        }
    }

    #[test]
    fn complexity_rows() {
        for r in TABLE4 {
            assert_eq!(r.period, 4 * ((1u64 << (2 * r.k)) - 1));
            assert!(r.actual >= r.bound);
        }
        assert_eq!(complexity_row(5).unwrap().actual, 4082);
        assert!(complexity_row(9).is_none());
    }
}
