//! Discriminant loci of the conic-bundle models and the ledger of blow-ups
//! that removes the base locus near `C_1` and its conjugate.

use serde::Serialize;

use crate::error::{ensure_invariant, Error, Result};
use crate::invariants::{SequenceInvariants, YDivisor};
use crate::sequence::MarkedSequence;
use crate::toric_fan::{fan_from_sequence, self_intersections};

pub const SECTIONS: [&str; 2] = ["Gamma", "Gamma_bar"];

/// The effective member left after subtracting the discriminant is not
/// determined here.
pub const RESIDUAL_UNKNOWN: &str = "unknown";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub index: usize,
    /// Number of curves in the fibre over `lambda_index`, namely `l_i + 1`.
    pub length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscriminantReport {
    pub deformed: bool,
    pub sections: [&'static str; 2],
    pub reducible_fiber_chains: Vec<Chain>,
    pub irreducible_fibers: Vec<usize>,
    pub hyperplane_sections: u64,
    /// Irreducible fibres of the Joyce model that become hyperplane-section
    /// components after deformation. Empty for the Joyce report.
    pub moved_to_hyperplane_sections: Vec<usize>,
    pub possibly_non_reduced: bool,
    pub residual_member: &'static str,
}

impl DiscriminantReport {
    fn from_range(
        inv: &SequenceInvariants,
        range: std::ops::Range<usize>,
        deformed: bool,
    ) -> DiscriminantReport {
        let mut chains = Vec::new();
        let mut irreducible = Vec::new();
        for i in range {
            match inv.l.get(i) {
                0 => irreducible.push(i),
                l => chains.push(Chain { index: i, length: l + 1 }),
            }
        }
        DiscriminantReport {
            deformed,
            sections: SECTIONS,
            reducible_fiber_chains: chains,
            irreducible_fibers: irreducible,
            hyperplane_sections: 0,
            moved_to_hyperplane_sections: Vec::new(),
            possibly_non_reduced: true,
            residual_member: RESIDUAL_UNKNOWN,
        }
    }
}

/// Discriminant of the conic bundle over the resolved minitwistor space of
/// the Joyce metric: the interior indices `1 < i < n + 2` split by `l_i > 0`.
pub fn discriminant_joyce(seq: &MarkedSequence) -> Result<DiscriminantReport> {
    let inv = SequenceInvariants::compute(seq)?;
    Ok(joyce_from(&inv))
}

fn joyce_from(inv: &SequenceInvariants) -> DiscriminantReport {
    DiscriminantReport::from_range(inv, 2..inv.seq.n() + 2, false)
}

/// Discriminant after deformation. Only indices `r <= i < s` keep their
/// fibre type; the `n + r - s` irreducible indices outside that window
/// contribute hyperplane-section curves instead.
pub fn discriminant_deformed(seq: &MarkedSequence) -> Result<DiscriminantReport> {
    let inv = SequenceInvariants::compute(seq)?;
    deformed_from(&inv)
}

fn deformed_from(inv: &SequenceInvariants) -> Result<DiscriminantReport> {
    let reg = &inv.regularity;
    let (Some(r), Some(s), Some(slack)) = (reg.r, reg.s, reg.slack) else {
        return Err(Error::InvalidSequence(
            "semi-free sequence: r and s are undefined (handled by LeBrun theory)".into(),
        ));
    };
    let n = inv.seq.n();
    let mut report = DiscriminantReport::from_range(inv, r..s, true);
    report.moved_to_hyperplane_sections = (2..r).chain(s..n + 2).collect();
    report.hyperplane_sections = slack as u64;
    ensure_invariant!(
        report
            .moved_to_hyperplane_sections
            .iter()
            .all(|&i| inv.l.get(i) == 0),
        "a reducible fibre lies outside the window r <= i < s"
    );
    ensure_invariant!(
        report.moved_to_hyperplane_sections.len() as i64 == slack,
        "{} indices moved but n + r - s = {slack}",
        report.moved_to_hyperplane_sections.len()
    );
    Ok(report)
}

/// Both reports at once; the deformed one is absent for semi-free input.
pub fn discriminants(inv: &SequenceInvariants) -> Result<(DiscriminantReport, Option<DiscriminantReport>)> {
    let joyce = joyce_from(inv);
    let deformed = if inv.regularity.semi_free {
        None
    } else {
        Some(deformed_from(inv)?)
    };
    Ok((joyce, deformed))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlowUpStage {
    pub stage: usize,
    /// Centres on the `E_1` side; each is blown up together with its conjugate.
    pub centers: Vec<String>,
    pub plus_indices: Vec<usize>,
    pub minus_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlowUpSchedule {
    pub m: usize,
    pub max_l: u64,
    pub stages: Vec<BlowUpStage>,
    /// `(C_1)^2` on the toric surface.
    pub l: i64,
    /// Bidegree `(l + 1, -1)` of the normal bundle of `E_1`.
    pub normal_bundle: (i64, i64),
}

impl BlowUpSchedule {
    pub fn stage_count(&self) -> usize {
        self.stages.len()
    }
}

pub fn blow_up_schedule(seq: &MarkedSequence) -> Result<BlowUpSchedule> {
    let inv = SequenceInvariants::compute(seq)?;
    schedule_from(&inv)
}

pub fn schedule_from(inv: &SequenceInvariants) -> Result<BlowUpSchedule> {
    let n = inv.seq.n();
    let last = n + 2;
    let m = inv.m();
    let y: &YDivisor = &inv.y;
    let max_l = inv.l.max();
    let mut stages = vec![BlowUpStage {
        stage: 1,
        centers: vec!["C_1".into(), "Cbar_1".into()],
        plus_indices: Vec::new(),
        minus_indices: Vec::new(),
    }];
    if m >= 2 {
        stages.push(BlowUpStage {
            stage: 2,
            centers: vec![
                "C_2".into(),
                format!("Cbar_{last}"),
                "Cbar_2".into(),
                format!("C_{last}"),
            ],
            plus_indices: Vec::new(),
            minus_indices: Vec::new(),
        });
        let interior = 2..last;
        let mut stage = 3;
        loop {
            // Stage 3 takes every index with l_i^± > 0; each later stage
            // keeps the indices whose multiplicity is still positive.
            let need = if stage == 3 { 1 } else { stage as u64 - 2 };
            let plus: Vec<usize> = interior.clone().filter(|&i| y.plus_at(i) >= need).collect();
            let minus: Vec<usize> = interior.clone().filter(|&i| y.minus_at(i) >= need).collect();
            if plus.is_empty() && minus.is_empty() {
                break;
            }
            let (on_plus, on_minus) = if stage == 3 {
                ("S".to_string(), "S".to_string())
            } else {
                let primes = "'".repeat(stage - 4);
                (format!("F{primes}"), format!("F{primes}"))
            };
            let mut centers = Vec::new();
            for &i in &plus {
                centers.push(if stage == 3 {
                    format!("E_2 ∩ {on_plus}_{i}^-")
                } else {
                    format!("{on_plus}_{i} ∩ E_2")
                });
            }
            for &i in &minus {
                centers.push(if stage == 3 {
                    format!("Ebar_{last} ∩ {on_minus}_{i}^-")
                } else {
                    format!("{on_minus}_{i} ∩ Ebar_{last}")
                });
            }
            stages.push(BlowUpStage {
                stage,
                centers,
                plus_indices: plus,
                minus_indices: minus,
            });
            stage += 1;
        }
        ensure_invariant!(
            stages.len() as u64 == max_l + 2,
            "{} stages but max l = {max_l}",
            stages.len()
        );
    }
    let fan = fan_from_sequence(&inv.seq)?;
    let l = self_intersections(&fan)?.get(1);
    Ok(BlowUpSchedule {
        m,
        max_l,
        stages,
        l,
        normal_bundle: (l + 1, -1),
    })
}
