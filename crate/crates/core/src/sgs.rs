//! Symplectic Gram-Schmidt decomposition: split any generator list into
//! anticommuting symplectic pairs and commuting isotropic generators.
//!
//! Any subgroup of the Pauli group (mod phase) admits a generating set
//! `{Z̄_1..Z̄_{s+c}, X̄_1..X̄_c}` in which `Z̄_i` and `X̄_i` anticommute for
//! `i ≤ c` while every other pair of generators commutes. The `c` pairs cost
//! one ebit each; the `s` remaining generators are isotropic. The procedure
//! here produces the minimum number of pairs.

use crate::bits;
use crate::pauli::{RowSpace, SympVector};
use crate::{Error, Result};

/// One anticommuting generator pair `(Z̄_i, X̄_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SympPair {
    pub zbar: SympVector,
    pub xbar: SympVector,
}

/// A generator set in standard form: symplectic pairs first, then isotropic
/// generators, jointly independent over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    n: usize,
    pairs: Vec<SympPair>,
    isotropic: Vec<SympVector>,
}

impl StandardForm {
    /// A form with no generators at all.
    pub fn empty(n: usize) -> Self {
        StandardForm {
            n,
            pairs: Vec::new(),
            isotropic: Vec::new(),
        }
    }

    /// Builds a form from explicit parts, validating every commutation
    /// relation and joint independence.
    pub fn new(n: usize, pairs: Vec<SympPair>, isotropic: Vec<SympVector>) -> Result<Self> {
        let form = StandardForm {
            n,
            pairs,
            isotropic,
        };
        form.check()?;
        Ok(form)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[SympPair] {
        &self.pairs
    }

    pub fn isotropic(&self) -> &[SympVector] {
        &self.isotropic
    }

    /// Number of symplectic pairs (ebits), `c`.
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Number of isotropic generators (ancillas), `s`.
    pub fn isotropic_count(&self) -> usize {
        self.isotropic.len()
    }

    /// Total generator count `m = s + 2c`.
    pub fn generator_count(&self) -> usize {
        2 * self.pairs.len() + self.isotropic.len()
    }

    /// Generators in check-matrix row order: `zbar` then `xbar` for each
    /// pair, then the isotropic generators.
    pub fn rows(&self) -> impl Iterator<Item = &SympVector> {
        self.pairs
            .iter()
            .flat_map(|p| [&p.zbar, &p.xbar])
            .chain(self.isotropic.iter())
    }

    /// True iff all four commutation-relation families hold and the
    /// generators are jointly independent.
    pub fn verify(&self) -> bool {
        self.check().is_ok()
    }

    fn check(&self) -> Result<()> {
        for row in self.rows() {
            if row.n() != self.n {
                return Err(Error::QubitMismatch {
                    left: self.n,
                    right: row.n(),
                });
            }
        }
        let rows: Vec<&SympVector> = self.rows().collect();
        let c = self.pairs.len();
        for (i, u) in rows.iter().enumerate() {
            for (j, v) in rows.iter().enumerate().skip(i + 1) {
                // Partners anticommute; everything else commutes.
                let partners = i < 2 * c && j == i + 1 && i % 2 == 0;
                if u.sp(v) != partners {
                    return Err(Error::InvalidForm(format!(
                        "generators {i} and {j} {}",
                        if partners {
                            "must anticommute"
                        } else {
                            "must commute"
                        }
                    )));
                }
            }
        }
        let space = RowSpace::from_rows(self.n, rows.iter().copied())?;
        if space.rank() != rows.len() {
            return Err(Error::InvalidForm(format!(
                "{} generators span only {} dimensions",
                rows.len(),
                space.rank()
            )));
        }
        Ok(())
    }
}

/// Result of [`decompose`]: the standard form plus how many dependent input
/// rows were discarded on the way.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub form: StandardForm,
    pub dropped_dependent: usize,
}

/// Decomposes a generator list into symplectic pairs and isotropic
/// generators. The generated row space is preserved and the pair count is
/// minimal. Dependent input rows are dropped (first occurrence wins) and
/// counted in the result.
///
/// The scan is deterministic: the first unassigned generator that
/// anticommutes with a later one is paired with the earliest such partner.
pub fn decompose(n: usize, gens: &[SympVector]) -> Result<Decomposition> {
    let mut space = RowSpace::new(n);
    let mut work: Vec<SympVector> = Vec::new();
    for g in gens {
        if space.insert(g)? {
            work.push(g.clone());
        }
    }
    let dropped_dependent = gens.len() - work.len();

    let mut pairs = Vec::new();
    'scan: loop {
        for i in 0..work.len() {
            for j in i + 1..work.len() {
                if work[i].sp(&work[j]) {
                    let g = work.remove(i);
                    let h = work.remove(j - 1);
                    for w in work.iter_mut() {
                        let anti_g = w.sp(&g);
                        let anti_h = w.sp(&h);
                        if anti_g {
                            w.mul_assign(&h);
                        }
                        if anti_h {
                            w.mul_assign(&g);
                        }
                    }
                    pairs.push(SympPair { zbar: g, xbar: h });
                    continue 'scan;
                }
            }
        }
        break;
    }

    let form = StandardForm {
        n,
        pairs,
        isotropic: work,
    };
    debug_assert!(form.verify());
    Ok(Decomposition {
        form,
        dropped_dependent,
    })
}

/// True iff the GF(2) row spaces of the two generator lists coincide.
pub fn group_equal(n: usize, a: &[SympVector], b: &[SympVector]) -> Result<bool> {
    let space_a = RowSpace::from_rows(n, a)?;
    let space_b = RowSpace::from_rows(n, b)?;
    if space_a.rank() != space_b.rank() {
        return Ok(false);
    }
    for v in a {
        if !space_b.contains(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// In the partner solver, vectors are unknowns over the coordinates
/// `[z_0..z_{n-1}, x_0..x_{n-1}]`; the functional `w ↦ ⟨u, w⟩` then has the
/// coefficient row `[u.x || u.z]`, which is exactly `u.to_row()`.
fn decode_zx(n: usize, row: &[u64]) -> SympVector {
    let mut v = SympVector::identity(n);
    for i in 0..n {
        v.set_z(i, bits::get(row, i));
        v.set_x(i, bits::get(row, n + i));
    }
    v
}

/// Extends a standard form to a full symplectic basis: `n` pairs and no
/// isotropic generators. Existing pairs are kept, each isotropic generator
/// receives a symplectic partner, and fresh pairs fill the remaining
/// dimensions. Already-full forms come back unchanged.
pub fn complete_symplectic_basis(form: &StandardForm) -> Result<StandardForm> {
    let n = form.n();
    if form.generator_count() > 2 * n {
        return Err(Error::InvalidForm(
            "more generators than symplectic dimensions".into(),
        ));
    }
    let mut pairs: Vec<SympPair> = form.pairs().to_vec();
    // Everything the next partner must commute with (or anticommute with,
    // for its own mate).
    let mut basis: Vec<SympVector> = form.rows().cloned().collect();

    let solve_partner = |basis: &[SympVector], mate: &SympVector| -> Result<SympVector> {
        let rows: Vec<Vec<u64>> = basis.iter().map(SympVector::to_row).collect();
        let rhs: Vec<bool> = basis.iter().map(|u| u == mate).collect();
        let solution = bits::solve(&rows, 2 * n, &rhs).ok_or_else(|| {
            Error::InvalidForm("no symplectic partner exists; generators are degenerate".into())
        })?;
        Ok(decode_zx(n, &solution))
    };

    for iso in form.isotropic() {
        let partner = solve_partner(&basis, iso)?;
        basis.push(partner.clone());
        pairs.push(SympPair {
            zbar: iso.clone(),
            xbar: partner,
        });
    }

    while pairs.len() < n {
        let rows: Vec<Vec<u64>> = basis.iter().map(SympVector::to_row).collect();
        let zbar = bits::nullspace_first(&rows, 2 * n)
            .map(|row| decode_zx(n, &row))
            .ok_or_else(|| Error::InvalidForm("no room left for a fresh pair".into()))?;
        basis.push(zbar.clone());
        let xbar = solve_partner(&basis, &zbar)?;
        basis.push(xbar.clone());
        pairs.push(SympPair { zbar, xbar });
    }

    StandardForm::new(n, pairs, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{BinMatrix, CheckMatrix};

    fn v(s: &str) -> SympVector {
        SympVector::from_pauli_str(s).unwrap()
    }

    pub(crate) fn set_m() -> Vec<SympVector> {
        vec![v("ZXZI"), v("ZZIZ"), v("XYXI"), v("XXIX")]
    }

    /// The generators the worked example arrives at.
    pub(crate) fn example_generators() -> Vec<SympVector> {
        vec![v("ZXZI"), v("ZZIZ"), v("YXXZ"), v("ZYYX")]
    }

    pub(crate) fn five_qubit_generators() -> Vec<SympVector> {
        vec![v("XZZXI"), v("IXZZX"), v("XIXZZ"), v("ZXIXZ")]
    }

    #[test]
    fn decompose_worked_example() {
        let d = decompose(4, &set_m()).unwrap();
        assert_eq!(d.dropped_dependent, 0);
        assert_eq!(d.form.pair_count(), 1);
        assert_eq!(d.form.isotropic_count(), 2);
        assert!(d.form.verify());
        // Tie-breaking pairs the first generator with the first partner.
        assert_eq!(d.form.pairs()[0].zbar, v("ZXZI"));
        assert_eq!(d.form.pairs()[0].xbar, v("ZZIZ"));
        // The generated group matches the example's set of generators.
        let rows: Vec<SympVector> = d.form.rows().cloned().collect();
        assert!(group_equal(4, &rows, &example_generators()).unwrap());
    }

    #[test]
    fn decompose_commuting_input_is_all_isotropic() {
        let d = decompose(5, &five_qubit_generators()).unwrap();
        assert_eq!(d.form.pair_count(), 0);
        assert_eq!(d.form.isotropic_count(), 4);
        assert!(d.form.verify());
    }

    #[test]
    fn decompose_minimal_anticommuting_pair() {
        let gens = vec![SympVector::single_x(1, 0), SympVector::single_z(1, 0)];
        let d = decompose(1, &gens).unwrap();
        assert_eq!(d.form.pair_count(), 1);
        assert_eq!(d.form.isotropic_count(), 0);
    }

    #[test]
    fn decompose_drops_dependent_rows() {
        let mut gens = set_m();
        gens.push(v("ZXZI").multiply(&v("ZZIZ")).unwrap());
        gens.push(v("ZXZI"));
        let d = decompose(4, &gens).unwrap();
        assert_eq!(d.dropped_dependent, 2);
        assert_eq!(d.form.generator_count(), 4);
        let rows: Vec<SympVector> = d.form.rows().cloned().collect();
        assert!(group_equal(4, &rows, &set_m()).unwrap());
    }

    #[test]
    fn decompose_rejects_mismatched_lengths() {
        assert!(decompose(4, &[v("XX")]).is_err());
    }

    #[test]
    fn standard_form_validation() {
        // Two anticommuting vectors cannot both be isotropic.
        let bad = StandardForm::new(
            1,
            vec![],
            vec![SympVector::single_x(1, 0), SympVector::single_z(1, 0)],
        );
        assert!(bad.is_err());

        // A pair that actually commutes is rejected.
        let bad = StandardForm::new(
            2,
            vec![SympPair {
                zbar: v("ZI"),
                xbar: v("IZ"),
            }],
            vec![],
        );
        assert!(bad.is_err());

        // Dependent generators are rejected.
        let bad = StandardForm::new(2, vec![], vec![v("ZZ"), v("ZZ")]);
        assert!(bad.is_err());

        assert!(StandardForm::empty(3).verify());
    }

    #[test]
    fn group_equal_examples() {
        assert!(group_equal(4, &set_m(), &example_generators()).unwrap());
        assert!(!group_equal(1, &[v("X")], &[v("Z")]).unwrap());
        let mut permuted = set_m();
        permuted.rotate_left(2);
        assert!(group_equal(4, &set_m(), &permuted).unwrap());
        // Same rank, different span.
        assert!(!group_equal(2, &[v("XI"), v("IX")], &[v("XI"), v("IZ")]).unwrap());
    }

    #[test]
    fn complete_on_empty_form_gives_canonical_pairs() {
        let full = complete_symplectic_basis(&StandardForm::empty(3)).unwrap();
        assert_eq!(full.pair_count(), 3);
        assert_eq!(full.isotropic_count(), 0);
        for (i, pair) in full.pairs().iter().enumerate() {
            assert_eq!(pair.zbar, SympVector::single_z(3, i));
            assert_eq!(pair.xbar, SympVector::single_x(3, i));
        }
    }

    #[test]
    fn complete_extends_worked_example() {
        let d = decompose(4, &example_generators()).unwrap();
        let full = complete_symplectic_basis(&d.form).unwrap();
        assert_eq!(full.pair_count(), 4);
        assert_eq!(full.isotropic_count(), 0);
        assert!(full.verify());
        // The original pair survives and the old isotropic generators are
        // now zbars of new pairs.
        assert_eq!(full.pairs()[0], d.form.pairs()[0]);
        let zbars: Vec<&SympVector> = full.pairs().iter().map(|p| &p.zbar).collect();
        for iso in d.form.isotropic() {
            assert!(zbars.contains(&iso));
        }
    }

    #[test]
    fn complete_is_idempotent_on_full_forms() {
        let full = complete_symplectic_basis(&StandardForm::empty(2)).unwrap();
        let again = complete_symplectic_basis(&full).unwrap();
        assert_eq!(full, again);
    }

    /// Independent oracle for the pair count: half the GF(2) rank of the
    /// pairwise commutation (Gram) matrix of the input generators.
    pub(crate) fn gram_rank_pairs(gens: &[SympVector]) -> usize {
        let m = gens.len();
        let mut gram = BinMatrix::zero(m, m);
        for i in 0..m {
            for j in 0..m {
                gram.set(i, j, gens[i].sp(&gens[j]));
            }
        }
        let rank = gram.rank();
        assert_eq!(rank % 2, 0, "symplectic Gram matrices have even rank");
        rank / 2
    }

    #[test]
    fn pair_count_matches_gram_rank_on_worked_example() {
        assert_eq!(gram_rank_pairs(&set_m()), 1);
        let d = decompose(4, &set_m()).unwrap();
        assert_eq!(d.form.pair_count(), 1);
    }

    fn random_generators(seed: u64) -> (usize, Vec<SympVector>) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=6);
        let count = rng.gen_range(0..=2 * n);
        let gens = (0..count)
            .map(|_| {
                let mut g = SympVector::identity(n);
                for i in 0..n {
                    g.set_x(i, rng.gen());
                    g.set_z(i, rng.gen());
                }
                g
            })
            .collect();
        (n, gens)
    }

    #[test]
    fn decompose_invariants_on_random_inputs() {
        for seed in 0..300 {
            let (n, gens) = random_generators(seed);
            let d = decompose(n, &gens).unwrap();
            assert!(d.form.verify(), "seed {seed}");

            // Row space is preserved.
            let rows: Vec<SympVector> = d.form.rows().cloned().collect();
            assert!(group_equal(n, &rows, &gens).unwrap(), "seed {seed}");

            // Pair count is minimal per the Gram-rank oracle.
            assert_eq!(d.form.pair_count(), gram_rank_pairs(&gens), "seed {seed}");

            // Determinism.
            let again = decompose(n, &gens).unwrap();
            assert_eq!(d.form, again.form);

            // Completion yields a full verified basis extending the form.
            let full = complete_symplectic_basis(&d.form).unwrap();
            assert_eq!(full.pair_count(), n, "seed {seed}");
            assert!(full.verify(), "seed {seed}");
        }
    }

    #[test]
    fn example_generators_match_reference_check_matrix() {
        // The symplectic display of the example generators.
        let expected = CheckMatrix::parse(
            "0 1 0 0 | 1 0 1 0\n\
             0 0 0 0 | 1 1 0 1\n\
             1 1 1 0 | 1 0 0 1\n\
             0 1 1 1 | 1 1 1 0",
        )
        .unwrap();
        assert_eq!(expected.rows(), example_generators().as_slice());
    }
}
