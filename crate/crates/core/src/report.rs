//! Versioned check records shared by the CLI and the tests.
//!
//! One record per check: label, modulus, expected, actual, pass. Integers are
//! hex with a `0x` prefix, most significant digit first, `-` for negatives.
//! A modulus of `0x0` means the check is exact equality.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::adic::{CongruenceRecord, CongruenceReport};

pub const FORMAT_VERSION: u32 = 1;

pub fn hex(v: &BigUint) -> String {
    format!("0x{v:x}")
}

pub fn hex_signed(v: &BigInt) -> String {
    let h = hex(v.magnitude());
    if v.sign() == num_bigint::Sign::Minus {
        format!("-{h}")
    } else {
        h
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub label: String,
    pub modulus: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckRecord {
    /// Exact comparison of two integers.
    pub fn exact(label: impl Into<String>, expected: impl Into<BigInt>, actual: impl Into<BigInt>) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        CheckRecord {
            label: label.into(),
            modulus: hex(&BigUint::zero()),
            pass: expected == actual,
            expected: hex_signed(&expected),
            actual: hex_signed(&actual),
        }
    }

    /// A yes/no check, recorded as `1` expected against `0` or `1`.
    pub fn flag(label: impl Into<String>, holds: bool) -> Self {
        Self::exact(label, 1, i32::from(holds))
    }
}

impl From<&CongruenceRecord> for CheckRecord {
    fn from(r: &CongruenceRecord) -> Self {
        CheckRecord {
            label: r.label.clone(),
            modulus: hex(&r.modulus),
            expected: hex(&r.expected),
            actual: hex(&r.actual),
            pass: r.pass,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub version: u32,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report {
            version: FORMAT_VERSION,
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend_congruences(&mut self, prefix: &str, report: &CongruenceReport) {
        for r in &report.records {
            let mut rec = CheckRecord::from(r);
            rec.label = format!("{prefix}{}", rec.label);
            self.records.push(rec);
        }
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    /// Header `version,label,modulus,expected,actual,pass`, one row per record.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["version", "label", "modulus", "expected", "actual", "pass"])
            .expect("in-memory write");
        for r in &self.records {
            w.write_record([
                self.version.to_string().as_str(),
                &r.label,
                &r.modulus,
                &r.expected,
                &r.actual,
                if r.pass { "true" } else { "false" },
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_forms() {
        assert_eq!(hex(&BigUint::from(255u32)), "0xff");
        assert_eq!(hex(&BigUint::zero()), "0x0");
        assert_eq!(hex_signed(&BigInt::from(-4)), "-0x4");
    }

    #[test]
    fn csv_and_json() {
        let mut r = Report::new();
        r.push(CheckRecord::exact("a, quoted", 5, 5));
        r.push(CheckRecord::flag("b", false));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("version,label,modulus,expected,actual,pass"));
        assert_eq!(lines.next(), Some("1,\"a, quoted\",0x0,0x5,0x5,true"));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["records"][1]["actual"], "0x0");
    }
}
