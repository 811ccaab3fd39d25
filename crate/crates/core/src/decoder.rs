//! Syndrome-table decoding and Pauli-frame Monte Carlo simulation.
//!
//! Everything here works at the symplectic level, which is exact for Pauli
//! channels: an error's syndrome is its commutation pattern against the
//! augmented generators, a correction succeeds when the residual operator
//! lies in the isotropic subgroup (degenerate corrections count as success),
//! and the channel applies independent single-qubit Paulis to the sender's
//! qubits only — the receiver's halves of the ebits are error-free.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::bits;
use crate::code::EaqeccCode;
use crate::pauli::{errors_of_weight, SympVector};
use crate::{Error, Result};

/// A measured syndrome: one bit per generator, in augmented row order
/// (pair-Z bit, pair-X bit for each symplectic pair, then isotropic bits).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syndrome {
    len: usize,
    words: Vec<u64>,
}

impl Syndrome {
    pub fn zero(len: usize) -> Self {
        Syndrome {
            len,
            words: bits::zeros(len),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len);
        bits::get(&self.words, i)
    }

    pub fn set_bit(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        bits::set(&mut self.words, i, value);
    }

    pub fn is_zero(&self) -> bool {
        bits::is_zero(&self.words)
    }

    /// Bitwise XOR; syndromes are linear in the error.
    pub fn xor(&self, other: &Syndrome) -> Result<Syndrome> {
        if self.len != other.len {
            return Err(Error::Dimension(format!(
                "syndrome length mismatch: {} vs {}",
                self.len, other.len
            )));
        }
        let mut out = self.clone();
        bits::xor_in(&mut out.words, &other.words);
        Ok(out)
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.bit(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({self})")
    }
}

/// Syndrome of a sender-side error: bit `j` is the symplectic product of
/// augmented row `j` with the error padded by identity on the receiver
/// qubits. Since the padding is trivial, this equals the product against the
/// sender-side generator, which is what gets computed.
pub fn syndrome_of(code: &EaqeccCode, error: &SympVector) -> Result<Syndrome> {
    if error.n() != code.n() {
        return Err(Error::QubitMismatch {
            left: code.n(),
            right: error.n(),
        });
    }
    Ok(syndrome_raw(code, error))
}

fn syndrome_raw(code: &EaqeccCode, error: &SympVector) -> Syndrome {
    let mut syndrome = Syndrome::zero(code.syndrome_len());
    for (j, row) in code.form().rows().enumerate() {
        syndrome.set_bit(j, row.sp(error));
    }
    syndrome
}

/// A coset-leader lookup table from syndromes to minimum-weight corrections.
///
/// Each entry maps a realized syndrome to the first minimum-weight error
/// producing it in the fixed enumeration order (qubit index, then X < Y < Z),
/// so the table is deterministic. The table stores the dimensions it was
/// built for; decoding functions check them against the code they are given.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    n: usize,
    syndrome_len: usize,
    covered_weight: usize,
    entries: HashMap<Syndrome, SympVector>,
}

impl SyndromeTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn syndrome_len(&self) -> usize {
        self.syndrome_len
    }

    /// Maximum error weight fully enumerated into the table.
    pub fn covered_weight(&self) -> usize {
        self.covered_weight
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Looks up the stored correction. An unknown syndrome yields the
    /// identity correction with the miss flag set — a defined fallback, and
    /// the conservative choice for error accounting.
    pub fn decode(&self, syndrome: &Syndrome) -> Result<Decoded> {
        if syndrome.len() != self.syndrome_len {
            return Err(Error::Dimension(format!(
                "syndrome has {} bits, table expects {}",
                syndrome.len(),
                self.syndrome_len
            )));
        }
        match self.entries.get(syndrome) {
            Some(correction) => Ok(Decoded {
                correction: correction.clone(),
                miss: false,
            }),
            None => Ok(Decoded {
                correction: SympVector::identity(self.n),
                miss: true,
            }),
        }
    }
}

/// Result of a table lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub correction: SympVector,
    pub miss: bool,
}

/// Enumerates every error of weight up to `max_weight` (lightest first) and
/// records the first one seen for each syndrome. The identity claims the
/// zero syndrome.
pub fn build_syndrome_table(code: &EaqeccCode, max_weight: usize) -> SyndromeTable {
    let n = code.n();
    let covered_weight = max_weight.min(n);
    let mut entries = HashMap::new();
    entries.insert(Syndrome::zero(code.syndrome_len()), SympVector::identity(n));
    for w in 1..=covered_weight {
        for error in errors_of_weight(n, w) {
            let syndrome = syndrome_raw(code, &error);
            entries.entry(syndrome).or_insert(error);
        }
    }
    SyndromeTable {
        n,
        syndrome_len: code.syndrome_len(),
        covered_weight,
        entries,
    }
}

/// Whether applying `correction` after `actual` restores the code space: the
/// residual `actual·correction` must have zero syndrome *and* lie in the
/// isotropic row space, i.e. act trivially on the encoded state. Degenerate
/// corrections — residual a nonidentity isotropic element — count as success.
pub fn is_correction_successful(
    code: &EaqeccCode,
    actual: &SympVector,
    correction: &SympVector,
) -> Result<bool> {
    if actual.n() != code.n() || correction.n() != code.n() {
        return Err(Error::QubitMismatch {
            left: code.n(),
            right: if actual.n() != code.n() {
                actual.n()
            } else {
                correction.n()
            },
        });
    }
    let residual = actual.multiply(correction)?;
    let zero_syndrome = syndrome_raw(code, &residual).is_zero();
    let in_isotropic = code.iso_space().contains_raw(&residual);
    // A zero-syndrome element of the full stabilizer row space is always
    // isotropic: a nonzero symplectic-pair component would anticommute with
    // its partner. Checked here because the success criterion relies on it.
    debug_assert!(
        !zero_syndrome
            || in_isotropic
            || !crate::pauli::RowSpace::from_rows(code.n(), code.form().rows())
                .expect("rows share n")
                .contains_raw(&residual)
    );
    Ok(zero_syndrome && in_isotropic)
}

/// The error-correction condition on a whole set: every pair of distinct
/// errors must either be distinguishable (their product anticommutes with
/// some generator) or degenerate (their product lies in the isotropic
/// subgroup). Empty and singleton sets pass vacuously.
pub fn correctable_set_check(code: &EaqeccCode, errors: &[SympVector]) -> Result<bool> {
    for e in errors {
        if e.n() != code.n() {
            return Err(Error::QubitMismatch {
                left: code.n(),
                right: e.n(),
            });
        }
    }
    for (i, a) in errors.iter().enumerate() {
        for b in &errors[i + 1..] {
            let product = a.multiply(b)?;
            let detectable = !syndrome_raw(code, &product).is_zero();
            if !detectable && !code.iso_space().contains_raw(&product) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Independent, identically distributed single-qubit Pauli noise: each qubit
/// suffers X, Y, or Z with the given probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliChannel {
    px: f64,
    py: f64,
    pz: f64,
}

impl PauliChannel {
    pub fn new(px: f64, py: f64, pz: f64) -> Result<Self> {
        for (name, p) in [("px", px), ("py", py), ("pz", pz)] {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                return Err(Error::Probability(format!("{name} = {p} is not in [0, 1]")));
            }
        }
        if px + py + pz > 1.0 {
            return Err(Error::Probability(format!(
                "px + py + pz = {} exceeds 1",
                px + py + pz
            )));
        }
        Ok(PauliChannel { px, py, pz })
    }

    /// The depolarizing channel with total error probability `p`, split
    /// evenly across X, Y and Z.
    pub fn depolarizing(p: f64) -> Result<Self> {
        if !p.is_finite() || !(0.0..=1.0).contains(&p) {
            return Err(Error::Probability(format!("p = {p} is not in [0, 1]")));
        }
        PauliChannel::new(p / 3.0, p / 3.0, p / 3.0)
    }

    pub fn px(&self) -> f64 {
        self.px
    }

    pub fn py(&self) -> f64 {
        self.py
    }

    pub fn pz(&self) -> f64 {
        self.pz
    }

    /// Probability of each single-qubit outcome `(x_bit, z_bit)`.
    pub fn pauli_probability(&self, x: bool, z: bool) -> f64 {
        match (x, z) {
            (true, false) => self.px,
            (true, true) => self.py,
            (false, true) => self.pz,
            (false, false) => 1.0 - self.px - self.py - self.pz,
        }
    }

    /// Samples one qubit's error as `(x_bit, z_bit)`.
    pub fn sample_pauli<R: Rng>(&self, rng: &mut R) -> (bool, bool) {
        let u: f64 = rng.gen();
        if u < self.px {
            (true, false)
        } else if u < self.px + self.py {
            (true, true)
        } else if u < self.px + self.py + self.pz {
            (false, true)
        } else {
            (false, false)
        }
    }

    /// Samples an i.i.d. error on `n` qubits.
    pub fn sample_error<R: Rng>(&self, n: usize, rng: &mut R) -> SympVector {
        let mut e = SympVector::identity(n);
        for i in 0..n {
            let (x, z) = self.sample_pauli(rng);
            e.set_x(i, x);
            e.set_z(i, z);
        }
        e
    }
}

/// The random number contract: trial `t` of a run seeded with `seed` draws
/// from `ChaCha12` stream `t` of that seed. Substreams are derived by
/// counter, so trials can be distributed across workers in any order and the
/// run still reproduces exactly.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// The error sampled in trial `trial` of a run: the deterministic function
/// the Monte Carlo loop itself uses, exposed so results can be replayed and
/// audited trial by trial.
pub fn trial_error(channel: &PauliChannel, n: usize, seed: u64, trial: u64) -> SympVector {
    let mut rng = trial_rng(seed, trial);
    channel.sample_error(n, &mut rng)
}

/// Outcome of a Monte Carlo run. The channel and seed are echoed so the run
/// can be reproduced from the report alone.
#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub trials: u64,
    pub failures: u64,
    /// Trials whose syndrome was absent from the table; these are included
    /// in `failures`.
    pub decoder_misses: u64,
    pub block_error_rate: f64,
    pub seed: u64,
    pub channel: PauliChannel,
}

/// Runs `trials` decode cycles: sample an error on the sender qubits, measure
/// the syndrome, decode against the table, and test the residual. Decoder
/// misses count as failures. Identical `(code, channel, trials, seed, table)`
/// reproduce the identical report; trials are spread across threads using the
/// per-trial substreams, so the partitioning cannot change the outcome.
pub fn monte_carlo(
    code: &EaqeccCode,
    channel: &PauliChannel,
    trials: u64,
    seed: u64,
    table: &SyndromeTable,
) -> Result<SimReport> {
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if table.n() != code.n() || table.syndrome_len() != code.syndrome_len() {
        return Err(Error::Dimension(format!(
            "table built for n={}, m={} but code has n={}, m={}",
            table.n(),
            table.syndrome_len(),
            code.n(),
            code.syndrome_len()
        )));
    }

    let run_range = |from: u64, to: u64| -> (u64, u64) {
        let mut failures = 0;
        let mut misses = 0;
        for trial in from..to {
            let error = trial_error(channel, code.n(), seed, trial);
            let syndrome = syndrome_raw(code, &error);
            let decoded = table.decode(&syndrome).expect("lengths checked above");
            let ok = !decoded.miss
                && is_correction_successful(code, &error, &decoded.correction)
                    .expect("dimensions checked above");
            if decoded.miss {
                misses += 1;
            }
            if !ok {
                failures += 1;
            }
        }
        (failures, misses)
    };

    let workers = std::thread::available_parallelism()
        .map(|p| p.get() as u64)
        .unwrap_or(1)
        .min(8)
        .min(trials);
    let (failures, misses) = if workers <= 1 {
        run_range(0, trials)
    } else {
        let chunk = trials.div_ceil(workers);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let from = w * chunk;
                    let to = ((w + 1) * chunk).min(trials);
                    scope.spawn(move || run_range(from, to))
                })
                .collect();
            handles.into_iter().fold((0, 0), |(f, m), h| {
                let (hf, hm) = h.join().expect("worker panicked");
                (f + hf, m + hm)
            })
        })
    };

    Ok(SimReport {
        trials,
        failures,
        decoder_misses: misses,
        block_error_rate: failures as f64 / trials as f64,
        seed,
        channel: *channel,
    })
}
