//! Verification reports and their JSON/CSV/text forms.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "BUDGET_EXCEEDED")]
    BudgetExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::BudgetExceeded => "BUDGET_EXCEEDED",
        })
    }
}

/// How the lower bound K ⊆ Aut(M) was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// K generated by reflections and the extra isometry-type symmetries.
    Isometry,
    /// Rank-2 system with no parallel lines: the matroid is uniform, so K is
    /// the full symmetric group on lines.
    UniformRank2,
    /// K is the wreath-product group built from component automorphisms.
    Wreath,
    /// K is the automorphism group of the all-circuits incidence graph.
    AllCircuits,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub system_id: String,
    pub num_lines: usize,
    /// Number of sets in the incidence graph (order-3 circuits, or all
    /// circuits for the wreath check).
    pub c3_count: usize,
    #[serde(with = "decimal")]
    pub aut_order: BigUint,
    #[serde(with = "decimal")]
    pub expected_order: BigUint,
    #[serde(with = "decimal")]
    pub known_group_order: BigUint,
    pub certificate: Certificate,
    pub subgroup_ok: bool,
    pub status: Status,
    pub timing_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationReport {
    /// PASS iff all three orders agree and the subgroup check held.
    pub fn decide(&mut self) {
        if self.status == Status::BudgetExceeded {
            return;
        }
        let ok = self.subgroup_ok
            && self.known_group_order == self.aut_order
            && self.aut_order == self.expected_order;
        self.status = if ok { Status::Pass } else { Status::Fail };
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub const CSV_HEADER: &'static str =
        "check,system,lines,sets,aut_order,expected_order,known_group_order,certificate,subgroup_ok,status,ms";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.check,
            self.system_id,
            self.num_lines,
            self.c3_count,
            self.aut_order,
            self.expected_order,
            self.known_group_order,
            serde_json::to_value(self.certificate)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default(),
            self.subgroup_ok,
            self.status,
            self.timing_ms
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<16} {:<10} lines={:<4} sets={:<5} |Aut|={:<10} expected={:<10} |K|={:<10} {:>6}ms  {}",
            self.system_id,
            self.check,
            self.num_lines,
            self.c3_count,
            self.aut_order,
            self.expected_order,
            self.known_group_order,
            self.timing_ms,
            self.status
        )?;
        if let Some(d) = &self.detail {
            write!(f, "  ({d})")?;
        }
        Ok(())
    }
}

mod decimal {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        BigUint::parse_bytes(text.as_bytes(), 10)
            .ok_or_else(|| serde::de::Error::custom(format!("not a decimal integer: {text:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport {
            check: "theorem".into(),
            system_id: "E8".into(),
            num_lines: 120,
            c3_count: 1120,
            aut_order: BigUint::from(348_364_800u64),
            expected_order: BigUint::from(348_364_800u64),
            known_group_order: BigUint::from(348_364_800u64),
            certificate: Certificate::Isometry,
            subgroup_ok: true,
            status: Status::Fail,
            timing_ms: 812,
            detail: None,
        }
    }

    #[test]
    fn json_round_trip_and_decimal_strings() {
        let mut r = sample();
        r.decide();
        assert_eq!(r.status, Status::Pass);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"aut_order\":\"348364800\""));
        assert!(text.contains("\"status\":\"PASS\""));
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn decide_requires_all_orders_and_subgroup() {
        let mut r = sample();
        r.subgroup_ok = false;
        r.decide();
        assert_eq!(r.status, Status::Fail);
        let mut r = sample();
        r.expected_order = BigUint::from(1u8);
        r.decide();
        assert_eq!(r.status, Status::Fail);
        let mut r = sample();
        r.status = Status::BudgetExceeded;
        r.decide();
        assert_eq!(r.status, Status::BudgetExceeded);
    }

    #[test]
    fn csv_row_shape() {
        let r = sample();
        assert_eq!(
            r.csv_row().split(',').count(),
            VerificationReport::CSV_HEADER.split(',').count()
        );
        assert!(r.csv_row().contains(",isometry,"));
    }
}
