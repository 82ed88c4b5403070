//! Matrix realizations of a ribbon object and their axiom checks.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, RingMatrix};
use crate::terms::Letter;

/// Braiding, duality and twist of a single object `V`, as exact matrices.
///
/// Cups are column vectors (`∅ → V⊗V*`, shape `n² × 1`), caps are row
/// vectors (shape `1 × n²`); crossings act on `[+][+]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonDatum {
    pub dim: usize,
    pub r_pos: RingMatrix,
    pub r_neg: RingMatrix,
    pub cup_pm: RingMatrix,
    pub cup_mp: RingMatrix,
    pub cap_pm: RingMatrix,
    pub cap_mp: RingMatrix,
    pub twist: RingMatrix,
    pub twist_inv: RingMatrix,
}

impl RibbonDatum {
    /// Cup `∅ → [a][b]`; requires `a ≠ b`.
    pub fn cup(&self, a: Letter, b: Letter) -> &RingMatrix {
        match (a, b) {
            (Letter::Plus, Letter::Minus) => &self.cup_pm,
            (Letter::Minus, Letter::Plus) => &self.cup_mp,
            _ => panic!("cup needs opposite orientations"),
        }
    }

    /// Cap `[a][b] → ∅`; requires `a ≠ b`.
    pub fn cap(&self, a: Letter, b: Letter) -> &RingMatrix {
        match (a, b) {
            (Letter::Plus, Letter::Minus) => &self.cap_pm,
            (Letter::Minus, Letter::Plus) => &self.cap_mp,
            _ => panic!("cap needs opposite orientations"),
        }
    }

    pub fn id(&self) -> RingMatrix {
        RingMatrix::identity(self.dim)
    }

    /// Closes the right strand of a `[+][+]` crossing.
    pub fn right_closure(&self, r: &RingMatrix) -> RingMatrix {
        let id = self.id();
        let open = id.kron(&self.cup_pm);
        let cross = r.kron(&id);
        let close = id.kron(&self.cap_pm);
        &(&close * &cross) * &open
    }

    /// Closes the left strand of a `[+][+]` crossing.
    pub fn left_closure(&self, r: &RingMatrix) -> RingMatrix {
        let id = self.id();
        let open = self.cup_mp.kron(&id);
        let cross = id.kron(r);
        let close = self.cap_mp.kron(&id);
        &(&close * &cross) * &open
    }

    /// The Kauffman-bracket datum on a 2-dimensional space.
    ///
    /// `cap = (0, iA, −iA⁻¹, 0)`, every cup is its transpose and
    /// `R± = A^{±1}·I + A^{∓1}·(cup·cap)`. A free loop is `δ = −A² − A⁻²`
    /// and the twist is `−A³`.
    pub fn bracket() -> Self {
        let a = LaurentPoly::var();
        let ainv = LaurentPoly::int_monomial(1, -1);
        let i = LaurentPoly::i();
        let z = LaurentPoly::from_int_terms([]);
        let cap_entries = vec![z.clone(), &i * &a, -(&i * &ainv), z];
        let cap = RingMatrix::row(cap_entries.clone());
        let cup = RingMatrix::column(cap_entries);
        let e = &cup * &cap;
        let r_pos = RingMatrix::identity(4).scale(&a).add(&e.scale(&ainv));
        let r_neg = RingMatrix::identity(4).scale(&ainv).add(&e.scale(&a));
        let twist = RingMatrix::identity(2).scale(&LaurentPoly::int_monomial(-1, 3));
        let twist_inv = RingMatrix::identity(2).scale(&LaurentPoly::int_monomial(-1, -3));
        RibbonDatum {
            dim: 2,
            r_pos,
            r_neg,
            cup_pm: cup.clone(),
            cup_mp: cup,
            cap_pm: cap.clone(),
            cap_mp: cap,
            twist,
            twist_inv,
        }
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("datum serializes")
    }

    /// Runs every axiom check exactly.
    pub fn validate(&self) -> DatumReport {
        let mut report = DatumReport::default();
        let n = self.dim;
        let n2 = n * n;
        let shapes: [(&str, &RingMatrix, (usize, usize)); 8] = [
            ("r_pos", &self.r_pos, (n2, n2)),
            ("r_neg", &self.r_neg, (n2, n2)),
            ("cup_pm", &self.cup_pm, (n2, 1)),
            ("cup_mp", &self.cup_mp, (n2, 1)),
            ("cap_pm", &self.cap_pm, (1, n2)),
            ("cap_mp", &self.cap_mp, (1, n2)),
            ("twist", &self.twist, (n, n)),
            ("twist_inv", &self.twist_inv, (n, n)),
        ];
        if n == 0 {
            report.push("shape", "dim must be at least 1".into());
        }
        for (name, m, want) in shapes {
            if m.shape() != want {
                report.push("shape", format!("{name} is {:?}, expected {want:?}", m.shape()));
            }
        }
        if !report.is_ok() {
            return report;
        }

        let id = self.id();
        let id2 = RingMatrix::identity(n2);
        report.check_eq("r2", "r_pos * r_neg", &(&self.r_pos * &self.r_neg), &id2);
        report.check_eq("r2", "r_neg * r_pos", &(&self.r_neg * &self.r_pos), &id2);

        let r12 = self.r_pos.kron(&id);
        let r23 = id.kron(&self.r_pos);
        let lhs = &(&r12 * &r23) * &r12;
        let rhs = &(&r23 * &r12) * &r23;
        report.check_eq("yang-baxter", "R12 R23 R12 = R23 R12 R23", &lhs, &rhs);

        let zigzags = [
            ("zigzag", "(1 x cap_mp)(cup_pm x 1)", id.kron(&self.cap_mp), self.cup_pm.kron(&id)),
            ("zigzag", "(cap_pm x 1)(1 x cup_mp)", self.cap_pm.kron(&id), id.kron(&self.cup_mp)),
            ("zigzag", "(1 x cap_pm)(cup_mp x 1)", id.kron(&self.cap_pm), self.cup_mp.kron(&id)),
            ("zigzag", "(cap_mp x 1)(1 x cup_pm)", self.cap_mp.kron(&id), id.kron(&self.cup_pm)),
        ];
        for (check, what, close, open) in zigzags {
            report.check_eq(check, what, &(&close * &open), &id);
        }

        report.check_eq("curl", "right closure of r_pos", &self.right_closure(&self.r_pos), &self.twist);
        report.check_eq("curl", "left closure of r_pos", &self.left_closure(&self.r_pos), &self.twist);
        report.check_eq("curl", "right closure of r_neg", &self.right_closure(&self.r_neg), &self.twist_inv);
        report.check_eq("curl", "left closure of r_neg", &self.left_closure(&self.r_neg), &self.twist_inv);
        report.check_eq("twist", "twist * twist_inv", &(&self.twist * &self.twist_inv), &id);
        report
    }

    /// The loop value `cap_pm · cup_pm` as a scalar.
    pub fn loop_value(&self) -> LaurentPoly {
        (&self.cap_pm * &self.cup_pm).get(0, 0).clone()
    }

    /// Scalar value of the twist, if it is a multiple of the identity.
    pub fn twist_scalar(&self) -> Option<LaurentPoly> {
        let t = self.twist.get(0, 0).clone();
        (self.twist == self.id().scale(&t)).then_some(t)
    }

    pub fn is_unit_loop(&self) -> bool {
        self.loop_value().is_one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DatumFailure {
    pub check: String,
    pub detail: String,
}

/// Failed checks of [`RibbonDatum::validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DatumReport {
    pub failures: Vec<DatumFailure>,
}

impl DatumReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has_failure(&self, check: &str) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }

    fn push(&mut self, check: &str, detail: String) {
        self.failures.push(DatumFailure { check: check.to_string(), detail });
    }

    fn check_eq(&mut self, check: &str, what: &str, got: &RingMatrix, want: &RingMatrix) {
        if let Some((r, c)) = got.first_difference(want) {
            let detail = if got.shape() != want.shape() {
                format!("{what}: shape {:?} vs {:?}", got.shape(), want.shape())
            } else {
                format!("{what}: entry ({r},{c}) is {} but expected {}", got.get(r, c), want.get(r, c))
            };
            self.push(check, detail);
        }
    }
}

impl fmt::Display for DatumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for fl in &self.failures {
            writeln!(f, "{}: {}", fl.check, fl.detail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_datum_is_valid() {
        let d = RibbonDatum::bracket();
        let report = d.validate();
        assert!(report.is_ok(), "{report}");
        assert_eq!(d.loop_value(), LaurentPoly::delta());
        assert_eq!(d.twist_scalar(), Some(LaurentPoly::int_monomial(-1, 3)));
    }

    #[test]
    fn perturbed_r_matrix_breaks_yang_baxter() {
        let mut d = RibbonDatum::bracket();
        let bumped = d.r_pos.get(1, 1) + &LaurentPoly::one();
        d.r_pos.set(1, 1, bumped);
        let report = d.validate();
        assert!(report.has_failure("yang-baxter"), "{report}");
    }

    #[test]
    fn wrong_dim_is_a_shape_error() {
        let mut d = RibbonDatum::bracket();
        d.dim = 3;
        let report = d.validate();
        assert!(report.has_failure("shape"));
        assert!(!report.has_failure("yang-baxter"));
    }

    #[test]
    fn datum_json_round_trip() {
        let d = RibbonDatum::bracket();
        assert_eq!(RibbonDatum::from_json(&d.to_json()).unwrap(), d);
    }
}
