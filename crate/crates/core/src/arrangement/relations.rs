//! The counting relations satisfied by contact systems: the end-count
//! identity, the intersection-graph edge identity, and the three planarity
//! inequalities on the peak/flat census.

use super::{ratu, Arrangement, EndKind};
use crate::rational::{rat, Rational};
use num::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationVariant {
    /// 2n = sum i*p_i + sum (i-1)*f_i + free_ends (end count, generalized
    /// with a free-end term; the strict form assumes free_ends = 0).
    Ends,
    /// m = sum C(i,2) (p_i + f_i) for 1-intersecting contact systems.
    Eq3,
    /// sum (i-6) p_i + sum (i-5) f_i <= -12 - 2 f_2.
    Ineq2,
    /// sum (i-6) p_i + sum (i-3) f_i <= -12 (one-sided systems).
    Ineq4,
    /// sum (i-4) p_i + sum (i-5) f_i <= -6 - 2 f_2 (all peaks on the
    /// outer face).
    Ineq5,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub variant: RelationVariant,
    pub applicable: bool,
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

fn not_applicable(variant: RelationVariant) -> RelationReport {
    RelationReport {
        variant,
        applicable: false,
        holds: true,
        lhs: Rational::zero(),
        rhs: Rational::zero(),
    }
}

/// Evaluates one counting relation on the arrangement. Unmet preconditions
/// yield `applicable: false`, never a failure.
pub fn check_relations(arr: &Arrangement, variant: RelationVariant) -> RelationReport {
    let profile = arr.profile();
    if !profile.is_contact_system {
        return not_applicable(variant);
    }
    let p = |i: usize| profile.p.get(&i).copied().unwrap_or(0);
    let f = |i: usize| profile.f.get(&i).copied().unwrap_or(0);
    let k = profile.k.max(2);
    let sum = |wp: &dyn Fn(i64) -> i64, wf: &dyn Fn(i64) -> i64| -> Rational {
        let mut s = Rational::zero();
        for i in 2..=k {
            s += rat(wp(i as i64)) * ratu(p(i)) + rat(wf(i as i64)) * ratu(f(i));
        }
        s
    };

    match variant {
        RelationVariant::Ends => {
            let lhs = ratu(2 * profile.n);
            let rhs = sum(&|i| i, &|i| i - 1) + ratu(profile.free_ends);
            RelationReport { variant, applicable: true, holds: lhs == rhs, lhs, rhs }
        }
        RelationVariant::Eq3 => {
            if !profile.is_1_intersecting {
                return not_applicable(variant);
            }
            let m = arr.pair_counts().len();
            let lhs = ratu(m);
            let rhs = sum(&|i| i * (i - 1) / 2, &|i| i * (i - 1) / 2);
            RelationReport { variant, applicable: true, holds: lhs == rhs, lhs, rhs }
        }
        RelationVariant::Ineq2 | RelationVariant::Ineq4 | RelationVariant::Ineq5 => {
            let strong_pre = profile.is_1_intersecting
                && profile.free_ends == 0
                && arr.walks.values().all(|w| w.nodes.len() >= 2)
                && !arr.walks.is_empty()
                && profile.c >= 3;
            if !strong_pre {
                return not_applicable(variant);
            }
            match variant {
                RelationVariant::Ineq2 => {
                    let lhs = sum(&|i| i - 6, &|i| i - 5);
                    let rhs = rat(-12) - rat(2) * ratu(f(2));
                    RelationReport { variant, applicable: true, holds: lhs <= rhs, lhs, rhs }
                }
                RelationVariant::Ineq4 => {
                    if !profile.is_one_sided {
                        return not_applicable(variant);
                    }
                    let lhs = sum(&|i| i - 6, &|i| i - 3);
                    let rhs = rat(-12);
                    RelationReport { variant, applicable: true, holds: lhs <= rhs, lhs, rhs }
                }
                RelationVariant::Ineq5 => {
                    // Needs every peak incident to the (designated) unbounded
                    // face; inapplicable when that cannot be certified.
                    let g = match arr.contact_plane_graph() {
                        Ok(g) => g,
                        Err(_) => return not_applicable(variant),
                    };
                    let Some(outer_peaks) = g.outer_face_peaks else {
                        return not_applicable(variant);
                    };
                    let total_peaks: usize = profile.p.values().sum();
                    if outer_peaks.len() != total_peaks {
                        return not_applicable(variant);
                    }
                    let lhs = sum(&|i| i - 4, &|i| i - 5);
                    let rhs = rat(-6) - rat(2) * ratu(f(2));
                    RelationReport { variant, applicable: true, holds: lhs <= rhs, lhs, rhs }
                }
                _ => unreachable!(),
            }
        }
    }
}

/// True when every string end is at a contact point.
pub fn all_ends_at_nodes(arr: &Arrangement) -> bool {
    arr.walks
        .values()
        .all(|w| w.start == EndKind::AtNode && w.end == EndKind::AtNode)
}
