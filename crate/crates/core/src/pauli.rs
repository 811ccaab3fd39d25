//! Bit-packed symplectic representation of n-qubit Pauli operators (phases
//! discarded) plus the GF(2) linear algebra used throughout the crate.
//!
//! An operator `e^{iφ} X^a Z^b` is stored as the bit-string pair `(a|b)`;
//! the phase is dropped. Multiplication of operators becomes XOR of the bit
//! strings, and two operators commute exactly when the symplectic inner
//! product `a·b' + a'·b` vanishes mod 2. Qubit 0 is the leftmost column in
//! all textual forms.

use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::{Error, Result};

/// A Pauli operator on `n` qubits, up to phase: the pair of X- and Z-part
/// bit strings `(a|b)` of `X^a Z^b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SympVector {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl SympVector {
    /// The identity operator (all-zero vector).
    pub fn identity(n: usize) -> Self {
        SympVector {
            n,
            x: bits::zeros(n),
            z: bits::zeros(n),
        }
    }

    /// Single-qubit `X` on qubit `i`.
    pub fn single_x(n: usize, i: usize) -> Self {
        let mut v = Self::identity(n);
        v.set_x(i, true);
        v
    }

    /// Single-qubit `Z` on qubit `i`.
    pub fn single_z(n: usize, i: usize) -> Self {
        let mut v = Self::identity(n);
        v.set_z(i, true);
        v
    }

    /// Single-qubit `Y` on qubit `i`.
    pub fn single_y(n: usize, i: usize) -> Self {
        let mut v = Self::identity(n);
        v.set_x(i, true);
        v.set_z(i, true);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_bit(&self, i: usize) -> bool {
        assert!(i < self.n, "qubit index {i} out of range for n={}", self.n);
        bits::get(&self.x, i)
    }

    pub fn z_bit(&self, i: usize) -> bool {
        assert!(i < self.n, "qubit index {i} out of range for n={}", self.n);
        bits::get(&self.z, i)
    }

    pub fn set_x(&mut self, i: usize, value: bool) {
        assert!(i < self.n, "qubit index {i} out of range for n={}", self.n);
        bits::set(&mut self.x, i, value);
    }

    pub fn set_z(&mut self, i: usize, value: bool) {
        assert!(i < self.n, "qubit index {i} out of range for n={}", self.n);
        bits::set(&mut self.z, i, value);
    }

    /// The Pauli label on qubit `i`.
    pub fn pauli(&self, i: usize) -> char {
        match (self.x_bit(i), self.z_bit(i)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    pub fn is_identity(&self) -> bool {
        bits::is_zero(&self.x) && bits::is_zero(&self.z)
    }

    /// Number of qubits carrying a non-identity Pauli.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Symplectic inner product `a·b' + a'·b` mod 2. Zero exactly when the
    /// represented operators commute.
    pub fn symplectic_product(&self, other: &Self) -> Result<bool> {
        self.check_n(other)?;
        Ok(self.sp(other))
    }

    pub(crate) fn sp(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        bits::dot_parity(&self.x, &other.z) ^ bits::dot_parity(&other.x, &self.z)
    }

    /// Operator product, with the phase discarded: bitwise XOR of both parts.
    pub fn multiply(&self, other: &Self) -> Result<SympVector> {
        self.check_n(other)?;
        let mut out = self.clone();
        bits::xor_in(&mut out.x, &other.x);
        bits::xor_in(&mut out.z, &other.z);
        Ok(out)
    }

    pub(crate) fn mul_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        bits::xor_in(&mut self.x, &other.x);
        bits::xor_in(&mut self.z, &other.z);
    }

    /// Parses a Pauli label string such as `"ZXZI"`.
    pub fn from_pauli_str(text: &str) -> Result<SympVector> {
        let text = text.trim();
        let mut v = SympVector::identity(text.chars().count());
        for (i, ch) in text.chars().enumerate() {
            match ch {
                'I' => {}
                'X' => v.set_x(i, true),
                'Y' => {
                    v.set_x(i, true);
                    v.set_z(i, true);
                }
                'Z' => v.set_z(i, true),
                _ => {
                    return Err(Error::PauliChar {
                        found: ch,
                        position: i,
                    })
                }
            }
        }
        Ok(v)
    }

    /// Parses one binary check-matrix row: whitespace-separated 0/1 bits with
    /// a literal `|` between the X and Z blocks, e.g. `"0 1 0 0 | 1 0 1 0"`.
    /// Unseparated digit runs such as `"0100|1010"` are accepted too.
    pub fn from_binary_row(text: &str) -> Result<SympVector> {
        let normalized = text.replace('|', " | ");
        let mut xs: Vec<bool> = Vec::new();
        let mut zs: Vec<bool> = Vec::new();
        let mut seen_bar = false;
        for token in normalized.split_whitespace() {
            if token == "|" {
                if seen_bar {
                    return Err(Error::Dimension(
                        "binary row has more than one '|' separator".into(),
                    ));
                }
                seen_bar = true;
                continue;
            }
            for ch in token.chars() {
                let bit = match ch {
                    '0' => false,
                    '1' => true,
                    _ => {
                        return Err(Error::Dimension(format!(
                            "unexpected character {ch:?} in binary row"
                        )))
                    }
                };
                if seen_bar {
                    zs.push(bit);
                } else {
                    xs.push(bit);
                }
            }
        }
        if !seen_bar {
            return Err(Error::Dimension(
                "binary row is missing the '|' separator between X and Z blocks".into(),
            ));
        }
        if xs.len() != zs.len() {
            return Err(Error::Dimension(format!(
                "X block has {} bits but Z block has {}",
                xs.len(),
                zs.len()
            )));
        }
        let mut v = SympVector::identity(xs.len());
        for (i, (&x, &z)) in xs.iter().zip(&zs).enumerate() {
            v.set_x(i, x);
            v.set_z(i, z);
        }
        Ok(v)
    }

    /// Renders the vector in check-matrix row form, e.g. `"0 1 0 0 | 1 0 1 0"`.
    pub fn to_binary_row(&self) -> String {
        let mut out = String::with_capacity(4 * self.n + 3);
        for i in 0..self.n {
            if i > 0 {
                out.push(' ');
            }
            out.push(if self.x_bit(i) { '1' } else { '0' });
        }
        out.push_str(" |");
        for i in 0..self.n {
            out.push(' ');
            out.push(if self.z_bit(i) { '1' } else { '0' });
        }
        out
    }

    /// Appends `extra` identity qubits on the right (receiver padding).
    pub fn padded(&self, extra: usize) -> SympVector {
        let mut out = SympVector::identity(self.n + extra);
        for i in 0..self.n {
            out.set_x(i, self.x_bit(i));
            out.set_z(i, self.z_bit(i));
        }
        out
    }

    /// Packs the vector as a single `2n`-bit row `[x || z]` for elimination.
    pub(crate) fn to_row(&self) -> Vec<u64> {
        let mut row = bits::zeros(2 * self.n);
        for i in 0..self.n {
            bits::set(&mut row, i, self.x_bit(i));
            bits::set(&mut row, self.n + i, self.z_bit(i));
        }
        row
    }
}

impl fmt::Display for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.pauli(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SympVector({self})")
    }
}

impl FromStr for SympVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SympVector::from_pauli_str(s)
    }
}

/// A GF(2) row space spanned by symplectic vectors, with membership testing.
#[derive(Debug, Clone)]
pub struct RowSpace {
    n: usize,
    ech: bits::Echelon,
}

impl RowSpace {
    pub fn new(n: usize) -> Self {
        RowSpace {
            n,
            ech: bits::Echelon::new(2 * n),
        }
    }

    pub fn from_rows<'a>(n: usize, rows: impl IntoIterator<Item = &'a SympVector>) -> Result<Self> {
        let mut space = RowSpace::new(n);
        for row in rows {
            space.insert(row)?;
        }
        Ok(space)
    }

    /// Adds a vector to the span; returns `true` if it was independent.
    pub fn insert(&mut self, v: &SympVector) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: v.n(),
            });
        }
        Ok(self.ech.insert(&v.to_row()))
    }

    /// True iff `v` is a GF(2) linear combination of the inserted rows.
    pub fn contains(&self, v: &SympVector) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: v.n(),
            });
        }
        Ok(self.contains_raw(v))
    }

    pub(crate) fn contains_raw(&self, v: &SympVector) -> bool {
        debug_assert_eq!(v.n(), self.n);
        self.ech.contains(&v.to_row())
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// An ordered list of symplectic vectors sharing one qubit count. Row order
/// is significant: it fixes the syndrome bit order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    n: usize,
    rows: Vec<SympVector>,
}

impl CheckMatrix {
    pub fn new(n: usize) -> Self {
        CheckMatrix {
            n,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(n: usize, rows: Vec<SympVector>) -> Result<Self> {
        for row in &rows {
            if row.n() != n {
                return Err(Error::QubitMismatch {
                    left: n,
                    right: row.n(),
                });
            }
        }
        Ok(CheckMatrix { n, rows })
    }

    pub fn push(&mut self, row: SympVector) -> Result<()> {
        if row.n() != self.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: row.n(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[SympVector] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rank of the `2n`-column binary matrix over GF(2).
    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }

    pub fn row_space(&self) -> RowSpace {
        RowSpace::from_rows(self.n, &self.rows).expect("rows share n by construction")
    }

    /// True iff `v` lies in the GF(2) row space of this matrix.
    pub fn in_rowspace(&self, v: &SympVector) -> Result<bool> {
        self.row_space().contains(v)
    }

    /// Parses the binary check-matrix text format: one row per line in
    /// [`SympVector::from_binary_row`] form, `#` comments and blank lines
    /// ignored.
    pub fn parse(text: &str) -> Result<CheckMatrix> {
        let mut rows: Vec<SympVector> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = SympVector::from_binary_row(line).map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            if let Some(first) = rows.first() {
                if row.n() != first.n() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!(
                            "row has {} qubits but earlier rows have {}",
                            row.n(),
                            first.n()
                        ),
                    });
                }
            }
            rows.push(row);
        }
        let n = rows.first().map(|r| r.n()).unwrap_or(0);
        Ok(CheckMatrix { n, rows })
    }
}

impl fmt::Display for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.to_binary_row())?;
        }
        Ok(())
    }
}

/// A plain binary matrix over GF(2), used for the classical sides of CSS
/// constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinMatrix {
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

impl BinMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        BinMatrix {
            ncols,
            rows: vec![bits::zeros(ncols); nrows],
        }
    }

    pub fn from_bool_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut out = BinMatrix::zero(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for (j, &bit) in row.iter().enumerate() {
                out.set(i, j, bit);
            }
        }
        Ok(out)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        bits::get(&self.rows[i], j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        bits::set(&mut self.rows[i], j, value);
    }

    /// The product `self · otherᵀ` over GF(2).
    pub fn mul_transpose(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.ncols != other.ncols {
            return Err(Error::Dimension(format!(
                "column mismatch: {} vs {}",
                self.ncols, other.ncols
            )));
        }
        let mut out = BinMatrix::zero(self.nrows(), other.nrows());
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in other.rows.iter().enumerate() {
                out.set(i, j, bits::dot_parity(a, b));
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut ech = bits::Echelon::new(self.ncols);
        for row in &self.rows {
            ech.insert(row);
        }
        ech.rank()
    }

    /// Parses the binary matrix text format: one row per line of 0/1 entries
    /// (whitespace-separated or contiguous), `#` comments and blanks ignored.
    pub fn parse(text: &str) -> Result<BinMatrix> {
        let mut rows: Vec<Vec<bool>> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for token in line.split_whitespace() {
                for ch in token.chars() {
                    match ch {
                        '0' => row.push(false),
                        '1' => row.push(true),
                        _ => {
                            return Err(Error::Parse {
                                line: idx + 1,
                                message: format!("unexpected character {ch:?} in binary matrix"),
                            })
                        }
                    }
                }
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!(
                            "row has {} columns but earlier rows have {}",
                            row.len(),
                            first.len()
                        ),
                    });
                }
            }
            rows.push(row);
        }
        BinMatrix::from_bool_rows(&rows)
    }

    /// Row `i` viewed as the X part (or Z part) of a symplectic vector.
    pub fn row_as_x(&self, i: usize) -> SympVector {
        let mut v = SympVector::identity(self.ncols);
        for j in 0..self.ncols {
            v.set_x(j, self.get(i, j));
        }
        v
    }

    pub fn row_as_z(&self, i: usize) -> SympVector {
        let mut v = SympVector::identity(self.ncols);
        for j in 0..self.ncols {
            v.set_z(j, self.get(i, j));
        }
        v
    }
}

impl fmt::Display for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows() {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.ncols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
        }
        Ok(())
    }
}

/// Iterator over all non-identity errors of exact weight `w` on `n` qubits,
/// in lexicographic order: by support (qubit index tuple), then by Pauli
/// label with X < Y < Z on each supported qubit.
pub struct WeightErrors {
    n: usize,
    w: usize,
    support: Vec<usize>,
    labels: Vec<u8>, // 0 = X, 1 = Y, 2 = Z
    exhausted: bool,
}

/// All errors of exact weight `w` on `n` qubits.
pub fn errors_of_weight(n: usize, w: usize) -> WeightErrors {
    let exhausted = w == 0 || w > n;
    WeightErrors {
        n,
        w,
        support: (0..w).collect(),
        labels: vec![0; w],
        exhausted,
    }
}

/// All errors of weight `1..=max_weight` on `n` qubits, lightest first.
pub fn errors_up_to_weight(n: usize, max_weight: usize) -> impl Iterator<Item = SympVector> {
    (1..=max_weight.min(n)).flat_map(move |w| errors_of_weight(n, w))
}

impl WeightErrors {
    fn current(&self) -> SympVector {
        let mut v = SympVector::identity(self.n);
        for (&q, &label) in self.support.iter().zip(&self.labels) {
            match label {
                0 => v.set_x(q, true),
                1 => {
                    v.set_x(q, true);
                    v.set_z(q, true);
                }
                _ => v.set_z(q, true),
            }
        }
        v
    }

    fn advance(&mut self) {
        // Odometer over labels, rightmost fastest.
        for i in (0..self.w).rev() {
            if self.labels[i] < 2 {
                self.labels[i] += 1;
                return;
            }
            self.labels[i] = 0;
        }
        // Next support combination in lexicographic order.
        let mut i = self.w;
        loop {
            if i == 0 {
                self.exhausted = true;
                return;
            }
            i -= 1;
            if self.support[i] < self.n - (self.w - i) {
                self.support[i] += 1;
                for j in i + 1..self.w {
                    self.support[j] = self.support[j - 1] + 1;
                }
                return;
            }
        }
    }
}

impl Iterator for WeightErrors {
    type Item = SympVector;

    fn next(&mut self) -> Option<SympVector> {
        if self.exhausted {
            return None;
        }
        let item = self.current();
        self.advance();
        Some(item)
    }
}

/// Number of candidate errors of weight `0..=max_weight` on `n` qubits:
/// `Σ_w C(n,w)·3^w`, saturating at `u128::MAX`.
pub fn enumeration_cost(n: usize, max_weight: usize) -> u128 {
    let mut total: u128 = 1; // the identity
    let mut binom: u128 = 1;
    let mut pow3: u128 = 1;
    for w in 1..=max_weight.min(n) {
        binom = match binom
            .checked_mul((n - w + 1) as u128)
            .map(|b| b / w as u128)
        {
            Some(b) => b,
            None => return u128::MAX,
        };
        pow3 = match pow3.checked_mul(3) {
            Some(p) => p,
            None => return u128::MAX,
        };
        total = match binom.checked_mul(pow3).and_then(|t| total.checked_add(t)) {
            Some(t) => t,
            None => return u128::MAX,
        };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> SympVector {
        SympVector::from_pauli_str(s).unwrap()
    }

    #[test]
    fn symplectic_product_examples() {
        // Any vector with itself.
        let a = SympVector::from_binary_row("1 0 | 0 1").unwrap();
        assert!(!a.symplectic_product(&a).unwrap());
        // M1 anticommutes with M2, M2 commutes with M3.
        assert!(v("ZXZI").symplectic_product(&v("ZZIZ")).unwrap());
        assert!(!v("ZZIZ").symplectic_product(&v("XYXI")).unwrap());
    }

    #[test]
    fn symplectic_product_dimension_error() {
        let err = v("XX").symplectic_product(&v("X")).unwrap_err();
        assert!(matches!(err, Error::QubitMismatch { left: 2, right: 1 }));
    }

    #[test]
    fn multiply_examples() {
        let u = v("ZYXI");
        assert!(u.multiply(&u).unwrap().is_identity());
        // X1 · Z1 = Y1 up to phase.
        let x1 = SympVector::single_x(3, 0);
        let z1 = SympVector::single_z(3, 0);
        assert_eq!(x1.multiply(&z1).unwrap(), v("YII"));
        let id = SympVector::identity(4);
        assert_eq!(id.multiply(&u).unwrap(), u);
        assert!(id.multiply(&v("X")).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(SympVector::identity(5).weight(), 0);
        assert_eq!(SympVector::single_x(4, 1).weight(), 1);
        assert_eq!(v("ZXZI").weight(), 3);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(v("ZXZI").to_binary_row(), "0 1 0 0 | 1 0 1 0");
        assert!(v("IIII").is_identity());
        assert_eq!(v("Y").to_binary_row(), "1 | 1");
        let err = SympVector::from_pauli_str("ZXQI").unwrap_err();
        assert!(matches!(
            err,
            Error::PauliChar {
                found: 'Q',
                position: 2
            }
        ));
    }

    #[test]
    fn binary_row_round_trip() {
        let row = SympVector::from_binary_row("0100|1010").unwrap();
        assert_eq!(row, v("ZXZI"));
        assert!(SympVector::from_binary_row("0 1 0 0").is_err());
        assert!(SympVector::from_binary_row("0 1 | 1 0 0").is_err());
        assert!(SympVector::from_binary_row("0 2 | 1 0").is_err());
    }

    #[test]
    fn rank_examples() {
        let zero = CheckMatrix::from_rows(3, vec![SympVector::identity(3); 2]).unwrap();
        assert_eq!(zero.rank(), 0);

        let set_m =
            CheckMatrix::from_rows(4, vec![v("ZXZI"), v("ZZIZ"), v("XYXI"), v("XXIX")]).unwrap();
        assert_eq!(set_m.rank(), 4);

        let dup = CheckMatrix::from_rows(4, vec![v("ZXZI"), v("ZXZI"), v("ZZIZ")]).unwrap();
        assert_eq!(dup.rank(), 2);
    }

    #[test]
    fn rowspace_membership() {
        let m = CheckMatrix::from_rows(4, vec![v("ZXZI"), v("ZZIZ")]).unwrap();
        assert!(m.in_rowspace(&SympVector::identity(4)).unwrap());
        assert!(m.in_rowspace(&v("ZXZI")).unwrap());
        let combo = v("ZXZI").multiply(&v("ZZIZ")).unwrap();
        assert!(m.in_rowspace(&combo).unwrap());
        assert!(!m.in_rowspace(&v("XIII")).unwrap());
        assert!(m.in_rowspace(&v("XXX")).is_err());
    }

    /// Exhaustive oracle: membership by trying all 2^r row combinations.
    fn in_rowspace_brute(u: &SympVector, rows: &[SympVector]) -> bool {
        let r = rows.len();
        assert!(r <= 12);
        (0..1u32 << r).any(|mask| {
            let mut acc = SympVector::identity(u.n());
            for (i, row) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.mul_assign(row);
                }
            }
            acc == *u
        })
    }

    #[test]
    fn rowspace_matches_exhaustive_combinations() {
        let rows = vec![v("ZXZI"), v("ZZIZ"), v("XYXI")];
        let m = CheckMatrix::from_rows(4, rows.clone()).unwrap();
        for cand in errors_up_to_weight(4, 4).chain([SympVector::identity(4)]) {
            assert_eq!(
                m.in_rowspace(&cand).unwrap(),
                in_rowspace_brute(&cand, &rows),
                "mismatch on {cand}"
            );
        }
    }

    #[test]
    fn check_matrix_parse_and_display() {
        let text = "# worked example rows\n0 1 0 0 | 1 0 1 0\n\n0 0 0 0 | 1 1 0 1\n";
        let m = CheckMatrix::parse(text).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.rows()[0], v("ZXZI"));
        assert_eq!(m.rows()[1], v("ZZIZ"));
        let round = CheckMatrix::parse(&m.to_string()).unwrap();
        assert_eq!(round, m);

        let err = CheckMatrix::parse("0 1 | 1 0\n0 | 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn bin_matrix_product_and_rank() {
        let h = BinMatrix::parse("1 1 0\n0 1 1").unwrap();
        let prod = h.mul_transpose(&h).unwrap();
        // [[0,1],[1,0]] over GF(2).
        assert!(!prod.get(0, 0));
        assert!(prod.get(0, 1));
        assert!(prod.get(1, 0));
        assert!(!prod.get(1, 1));
        assert_eq!(prod.rank(), 2);

        let other = BinMatrix::zero(2, 4);
        assert!(h.mul_transpose(&other).is_err());
    }

    #[test]
    fn error_enumeration_order_and_counts() {
        let first: Vec<String> = errors_of_weight(3, 1).map(|e| e.to_string()).collect();
        assert_eq!(
            first,
            ["XII", "YII", "ZII", "IXI", "IYI", "IZI", "IIX", "IIY", "IIZ"]
        );
        assert_eq!(errors_of_weight(4, 2).count(), 6 * 9);
        assert_eq!(errors_up_to_weight(4, 4).count(), 255); // 4^4 - 1
        assert_eq!(enumeration_cost(4, 4), 256);
        assert_eq!(enumeration_cost(4, 1), 13);
        assert_eq!(enumeration_cost(200, 200), u128::MAX);
    }
}
