//! Assembling full EAQECC objects from classical inputs or raw generators:
//! parameters, augmented check matrices, and brute-force distance.
//!
//! The augmented matrix resolves the anticommutativity of the symplectic
//! pairs by acting on `c` extra receiver-side qubits: pair `i` gets a `Z` on
//! receiver qubit `i` in its `zbar` row and an `X` in its `xbar` row, after
//! which all rows commute. Receiver qubits occupy columns `n..n+c`, after
//! the sender columns, and are assumed error-free.

use num_rational::Ratio;

use crate::gf4::{ebit_count_css, ebit_count_gf4, Gf4Matrix};
use crate::pauli::{errors_of_weight, BinMatrix, CheckMatrix, RowSpace, SympVector};
use crate::sgs::{decompose, StandardForm};
use crate::{DistanceResult, Error, Result};

/// Summary parameters of a code: `[[n, k; c]]` with `s` ancillas, optional
/// distance, and the rate pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    /// Physical qubits on the sender side.
    pub n: usize,
    /// Logical qubits, `k = n - s - c`.
    pub k: usize,
    /// Ebits consumed.
    pub c: usize,
    /// Ancilla qubits.
    pub s: usize,
    /// Distance, when an explicit search has established it.
    pub d: Option<usize>,
    /// `k / n`.
    pub rate: Ratio<i64>,
    /// Net rate `(k - c) / n`; negative when the code consumes more ebits
    /// than it transmits.
    pub net_rate: Ratio<i64>,
}

/// An `[[n,k;c]]` entanglement-assisted code: the standard-form generators
/// plus the augmented check matrix over `n + c` qubits.
#[derive(Debug, Clone)]
pub struct EaqeccCode {
    form: StandardForm,
    augmented: CheckMatrix,
    dropped_dependent: usize,
    iso_space: RowSpace,
}

/// Appends `c` receiver columns to a standard form, producing the augmented
/// check matrix: for pair `i` the `zbar` row gets `Z` and the `xbar` row gets
/// `X` on receiver qubit `i`; isotropic rows get the identity. All output
/// rows mutually commute.
pub fn augment(form: &StandardForm) -> CheckMatrix {
    let n = form.n();
    let c = form.pair_count();
    let mut rows = Vec::with_capacity(form.generator_count());
    for (i, pair) in form.pairs().iter().enumerate() {
        let mut zrow = pair.zbar.padded(c);
        zrow.set_z(n + i, true);
        rows.push(zrow);
        let mut xrow = pair.xbar.padded(c);
        xrow.set_x(n + i, true);
        rows.push(xrow);
    }
    for iso in form.isotropic() {
        rows.push(iso.padded(c));
    }
    CheckMatrix::from_rows(n + c, rows).expect("augmented rows share n + c")
}

impl EaqeccCode {
    fn from_form(form: StandardForm, dropped_dependent: usize) -> Result<Self> {
        if form.n() == 0 {
            return Err(Error::Domain("a code needs at least one qubit".into()));
        }
        let augmented = augment(&form);
        let iso_space = RowSpace::from_rows(form.n(), form.isotropic())?;
        Ok(EaqeccCode {
            form,
            augmented,
            dropped_dependent,
            iso_space,
        })
    }

    /// Builds a code from raw (possibly noncommuting, possibly dependent)
    /// stabilizer generators on `n` qubits.
    pub fn from_generators(n: usize, gens: &[SympVector]) -> Result<Self> {
        let d = decompose(n, gens)?;
        Self::from_form(d.form, d.dropped_dependent)
    }

    /// Builds a code from a classical quaternary check matrix via the
    /// `(ωH ; ω̄H)` expansion. An `[n, k_cl, d]` classical code yields an
    /// `[[n, 2k_cl - n + c, d; c]]` quantum code with `c = rank(H·H†)`.
    pub fn from_gf4(h: &Gf4Matrix) -> Result<Self> {
        let generators = h.expand_ctq().to_symplectic();
        let code = Self::from_generators(generators.n(), generators.rows())?;
        debug_assert_eq!(code.c(), ebit_count_gf4(h));
        debug_assert_eq!(
            code.k() as i64,
            2 * (h.ncols() as i64 - h.rank() as i64) - h.ncols() as i64 + code.c() as i64,
        );
        Ok(code)
    }

    /// Builds a CSS-style code from two binary parity-check matrices over the
    /// same columns: the rows of `(H₁|0)` become X-type generators and the
    /// rows of `(0|H₂)` Z-type. Encodes `k₁ + k₂ - n + c` qubits with
    /// `c = rank(H₁·H₂ᵀ)`.
    pub fn from_css(h1: &BinMatrix, h2: &BinMatrix) -> Result<Self> {
        if h1.ncols() != h2.ncols() {
            return Err(Error::Dimension(format!(
                "CSS inputs need equal column counts: {} vs {}",
                h1.ncols(),
                h2.ncols()
            )));
        }
        let n = h1.ncols();
        let mut gens = Vec::with_capacity(h1.nrows() + h2.nrows());
        for i in 0..h1.nrows() {
            gens.push(h1.row_as_x(i));
        }
        for i in 0..h2.nrows() {
            gens.push(h2.row_as_z(i));
        }
        let code = Self::from_generators(n, &gens)?;
        debug_assert_eq!(code.c(), ebit_count_css(h1, h2)?);
        Ok(code)
    }

    /// Sender-side physical qubits.
    pub fn n(&self) -> usize {
        self.form.n()
    }

    /// Logical qubits `k = n - s - c`.
    pub fn k(&self) -> usize {
        self.n() - self.s() - self.c()
    }

    /// Ebits (symplectic pairs).
    pub fn c(&self) -> usize {
        self.form.pair_count()
    }

    /// Ancillas (isotropic generators).
    pub fn s(&self) -> usize {
        self.form.isotropic_count()
    }

    pub fn form(&self) -> &StandardForm {
        &self.form
    }

    /// The augmented check matrix over `n + c` qubits, sender columns first.
    pub fn augmented(&self) -> &CheckMatrix {
        &self.augmented
    }

    /// How many dependent rows were discarded from the input generators.
    pub fn dropped_dependent(&self) -> usize {
        self.dropped_dependent
    }

    /// Sender-side generators in augmented row order.
    pub fn generators(&self) -> Vec<SympVector> {
        self.form.rows().cloned().collect()
    }

    pub(crate) fn iso_space(&self) -> &RowSpace {
        &self.iso_space
    }

    /// Syndrome length `m = s + 2c`.
    pub fn syndrome_len(&self) -> usize {
        self.form.generator_count()
    }

    /// Parameter summary. The distance field stays empty until an explicit
    /// [`EaqeccCode::distance`] search fills it in — it is the only
    /// exponential-cost parameter.
    pub fn params(&self) -> CodeParams {
        let (n, k, c, s) = (self.n(), self.k(), self.c(), self.s());
        let rank = RowSpace::from_rows(n, self.form.rows())
            .expect("form rows share n")
            .rank();
        // k - c = n - dim rowspace(H), independent of the symplectic
        // structure.
        assert_eq!(k as i64 - c as i64, n as i64 - rank as i64);
        CodeParams {
            n,
            k,
            c,
            s,
            d: None,
            rate: Ratio::new(k as i64, n as i64),
            net_rate: Ratio::new(k as i64 - c as i64, n as i64),
        }
    }

    /// Minimum weight of an undetected, uncorrectable sender-side error: the
    /// smallest `w ≥ 1` for which some weight-`w` error commutes with every
    /// generator yet lies outside the isotropic row space. Exhaustive over
    /// all Pauli patterns of weight up to `max_weight`, in the fixed
    /// lexicographic order (qubit index, then X < Y < Z).
    pub fn distance(&self, max_weight: usize) -> DistanceResult {
        let rows: Vec<&SympVector> = self.form.rows().collect();
        for w in 1..=max_weight.min(self.n()) {
            for error in errors_of_weight(self.n(), w) {
                if rows.iter().all(|g| !g.sp(&error)) && !self.iso_space.contains_raw(&error) {
                    return DistanceResult::Found(w);
                }
            }
        }
        DistanceResult::ExceedsMaxWeight(max_weight)
    }
}
