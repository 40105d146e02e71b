use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::census::{census_outerplanar, ratio, Ratio, RatioDirection};
use crate::error::{Error, Result};
use crate::exec::{self, Jobs};
use crate::families::{expected_census, Family, FamilySpec};

/// Rows above this boundary length are not cross-checked by the DP.
const DP_CHECK_MAX_BOUNDARY: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: usize,
    #[serde(serialize_with = "decimal")]
    pub odd: BigUint,
    #[serde(serialize_with = "decimal")]
    pub even: BigUint,
    pub ratio: Ratio,
    /// Whether the DP on the generated graph reproduces the closed form;
    /// `None` when the instance is too large to build.
    pub dp_agrees: Option<bool>,
}

fn decimal<S: serde::Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub family: String,
    /// `"oe"` for odd/even, `"eo"` for even/odd.
    pub ratio: &'static str,
    pub rows: Vec<SweepRow>,
    pub strictly_increasing: bool,
}

impl SweepTable {
    pub fn all_dp_agree(&self) -> bool {
        self.rows.iter().all(|r| r.dp_agrees != Some(false))
    }

    /// CSV with exact and 6-significant-digit ratios; the last line is a
    /// comment with the monotonicity result.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("param,c_o,c_e,ratio_exact,ratio_decimal\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.param,
                r.odd,
                r.even,
                r.ratio,
                r.ratio.to_decimal(6)
            );
        }
        let _ = writeln!(
            out,
            "# {} {} ratio strictly increasing: {}",
            self.family, self.ratio, self.strictly_increasing
        );
        out
    }
}

/// The ratio that diverges for each family: odd/even for `R` and `T`,
/// even/odd for `L` and `H`.
pub fn designated_direction(family: Family) -> Result<RatioDirection> {
    match family {
        Family::R | Family::T => Ok(RatioDirection::OddOverEven),
        Family::L | Family::H => Ok(RatioDirection::EvenOverOdd),
        other => Err(Error::InvalidParameter(format!(
            "sweeps cover R, L, H and T, not {other}"
        ))),
    }
}

/// Closed-form census table over `params`, each row cross-checked against
/// the DP on the generated graph when it is small enough.
pub fn divergence_sweep(family: Family, params: &[usize], jobs: Jobs) -> Result<SweepTable> {
    let direction = designated_direction(family)?;
    let specs: Vec<(usize, FamilySpec)> = params
        .iter()
        .map(|&p| FamilySpec::new(family, p, &[]).map(|s| (p, s)))
        .collect::<Result<_>>()?;
    let rows = exec::map(&specs, jobs, |(param, spec)| {
        let expected = expected_census(spec).expect("swept families have closed forms");
        let param = *param;
        let dp_agrees = if boundary_estimate(spec) <= DP_CHECK_MAX_BOUNDARY {
            spec.generate()
                .ok()
                .map(|og| census_outerplanar(&og).same_counts(&expected))
        } else {
            None
        };
        SweepRow {
            param,
            ratio: ratio(&expected, direction),
            odd: expected.odd,
            even: expected.even,
            dp_agrees,
        }
    });
    let strictly_increasing = rows.windows(2).all(|w| w[0].ratio < w[1].ratio);
    Ok(SweepTable {
        family: family.to_string(),
        ratio: match direction {
            RatioDirection::OddOverEven => "oe",
            RatioDirection::EvenOverOdd => "eo",
        },
        rows,
        strictly_increasing,
    })
}

fn boundary_estimate(spec: &FamilySpec) -> usize {
    match *spec {
        FamilySpec::R { k } => 3 * k,
        FamilySpec::L { n } => 2 * n + 1,
        FamilySpec::H { q } => 4 * q,
        FamilySpec::T { n } => 5 * n,
        _ => 0,
    }
}

/// `from, from + step, ...` up to and including `to`.
pub fn param_range(from: usize, to: usize, step: usize) -> Result<Vec<usize>> {
    if step == 0 {
        return Err(Error::InvalidParameter("step must be positive".into()));
    }
    if from > to {
        return Err(Error::InvalidParameter(format!("empty range {from}..={to}")));
    }
    Ok((from..=to).step_by(step).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratios(t: &SweepTable) -> Vec<String> {
        t.rows.iter().map(|r| r.ratio.to_string()).collect()
    }

    #[test]
    fn r_sweep() {
        let t = divergence_sweep(Family::R, &[3, 5, 7, 9, 11], Jobs::Auto).unwrap();
        assert_eq!(ratios(&t), ["8/3", "32/5", "128/7", "512/9", "2048/11"]);
        assert!(t.strictly_increasing);
        assert!(t.all_dp_agree());
    }

    #[test]
    fn h_sweep() {
        let t = divergence_sweep(Family::H, &[4, 8, 12], Jobs::SEQUENTIAL).unwrap();
        assert_eq!(ratios(&t), ["7/2", "15/2", "23/2"]);
        assert!(t.all_dp_agree());
    }

    #[test]
    fn l_sweep() {
        let params = param_range(2, 8, 1).unwrap();
        let t = divergence_sweep(Family::L, &params, Jobs::Auto).unwrap();
        let expected: Vec<String> = params.iter().map(|&n| Ratio::new(n as u32 - 1, 2u32).to_string()).collect();
        assert_eq!(ratios(&t), expected);
        assert!(t.strictly_increasing);
    }

    #[test]
    fn t_sweep_crosses_sharpness() {
        let t = divergence_sweep(Family::T, &param_range(3, 15, 2).unwrap(), Jobs::Auto).unwrap();
        assert!(t.strictly_increasing);
        assert!(t.all_dp_agree());
        let row = t.rows.iter().find(|r| r.param == 11).unwrap();
        assert!(row.ratio >= Ratio::integer(11u32));
        let row = t.rows.iter().find(|r| r.param == 9).unwrap();
        assert!(row.ratio < Ratio::integer(9u32));
    }

    #[test]
    fn csv_layout() {
        let t = divergence_sweep(Family::R, &[3, 5], Jobs::SEQUENTIAL).unwrap();
        assert_eq!(
            t.to_csv(),
            "param,c_o,c_e,ratio_exact,ratio_decimal\n3,8,3,8/3,2.66667\n5,32,5,32/5,6.40000\n# R oe ratio strictly increasing: true\n"
        );
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let params = param_range(4, 40, 4).unwrap();
        assert_eq!(
            divergence_sweep(Family::H, &params, Jobs::SEQUENTIAL).unwrap(),
            divergence_sweep(Family::H, &params, Jobs::Auto).unwrap()
        );
    }

    #[test]
    fn bad_requests() {
        assert!(divergence_sweep(Family::S, &[3], Jobs::Auto).is_err());
        assert!(divergence_sweep(Family::R, &[4], Jobs::Auto).is_err());
        assert!(param_range(5, 3, 1).is_err());
        assert!(param_range(1, 3, 0).is_err());
    }
}
