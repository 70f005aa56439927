//! Arch factorizations of periodic words `uⁿ` and `u^ω`, and `h`, `ρ` of
//! large powers.
//!
//! Over `u^ω` every position starts an arch and `α(i + L) = α(i) + L`, so
//! the arch boundaries `λ_k = α^k(0)` are driven by a self-map on residues
//! mod `L`. Once the orbit of 0 repeats, every further `p` arches advance by
//! exactly `δ` copies of `u`, and both measures of `uⁿ` grow by `p` each
//! time `n` grows by `δ`.

use crate::error::{Error, Result};
use crate::measures::{h_letters, rho_letters};
use crate::word::Word;

/// Periodicity parameters of the arch factorization of `u^ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodData {
    /// `L = |u|`.
    pub length: usize,
    /// `K`: arches before the boundary residues start cycling.
    pub transient_arches: usize,
    /// `T = λ_K`.
    pub transient: u64,
    /// `p`: the arch-period.
    pub period: usize,
    /// `Δ = λ_{K+p} − λ_K`, a multiple of `L`.
    pub span: u64,
    /// `δ = Δ / L`.
    pub copies: u64,
    /// `σ = δ / p` in lowest terms.
    pub slope_num: u64,
    pub slope_den: u64,
    lambdas: Vec<u64>,
}

impl PeriodData {
    /// `λ_k = α^k(0)` over `u^ω`, for any `k`.
    pub fn lambda(&self, k: u64) -> u128 {
        let (k_t, p) = (self.transient_arches as u64, self.period as u64);
        if k <= k_t + p {
            return self.lambdas[k as usize] as u128;
        }
        let laps = (k - k_t) / p;
        let phase = (k - k_t) % p;
        self.lambdas[(k_t + phase) as usize] as u128 + laps as u128 * self.span as u128
    }
}

fn require_full_alphabet(u: &Word) -> Result<()> {
    let missing = u.missing_letters();
    if missing.is_empty() {
        Ok(())
    } else {
        Err(Error::MissingLetters { missing })
    }
}

/// For each residue `i ∈ 0..L`, the length `α(i) − i` of the arch starting
/// at `i` in `u^ω`.
///
/// `α` is nondecreasing, so a sliding window over `u·u` finds all of them in
/// one pass; every window of length `L` is a conjugate of `u` and so holds
/// all letters.
pub fn alpha_residues(u: &Word) -> Result<Vec<usize>> {
    require_full_alphabet(u)?;
    let width = u.alphabet().size();
    let len = u.len();
    let at = |k: usize| u.letters()[k % len] as usize;
    let mut counts = vec![0usize; width];
    let mut covered = 0;
    let mut end = 0;
    let mut out = Vec::with_capacity(len);
    for start in 0..len {
        while covered < width {
            let a = at(end);
            if counts[a] == 0 {
                covered += 1;
            }
            counts[a] += 1;
            end += 1;
        }
        out.push(end - start);
        let a = at(start);
        counts[a] -= 1;
        if counts[a] == 0 {
            covered -= 1;
        }
    }
    Ok(out)
}

/// Follows `λ_k mod L` from `λ₀ = 0` until a residue repeats.
pub fn arch_period(u: &Word) -> Result<PeriodData> {
    let steps = alpha_residues(u)?;
    let len = u.len();
    let mut first_visit: Vec<Option<usize>> = vec![None; len];
    let mut lambdas = vec![0u64];
    first_visit[0] = Some(0);
    loop {
        let last = *lambdas.last().unwrap();
        let next = last + steps[(last % len as u64) as usize] as u64;
        let k = lambdas.len();
        lambdas.push(next);
        let residue = (next % len as u64) as usize;
        if let Some(k0) = first_visit[residue] {
            let period = k - k0;
            let span = next - lambdas[k0];
            let copies = span / len as u64;
            let g = gcd(copies, period as u64);
            return Ok(PeriodData {
                length: len,
                transient_arches: k0,
                transient: lambdas[k0],
                period,
                span,
                copies,
                slope_num: copies / g,
                slope_den: period as u64 / g,
                lambdas,
            });
        }
        first_visit[residue] = Some(k);
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Result of the periodic reduction for one `uⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowReport {
    pub n: u64,
    pub h: u128,
    pub rho: u128,
    /// Exponent actually materialised.
    pub base_exponent: u64,
    /// Number of `δ`-steps added on top of `u^{base_exponent}`.
    pub steps: u64,
    pub period: PeriodData,
}

/// Smallest exponent from which `h` and `ρ` of `uⁿ` step by `p` per `δ`
/// extra copies: `⌈(T + T′)/L⌉ + δ`, never below 1.
///
/// The extra `δ` covers the boundary where `⌈(T + T′)/L⌉` alone is too
/// early; `ABAAB` already steps by 3, not 2, from `n = 1` to `n = 2`.
pub fn pow_threshold(u: &Word) -> Result<u64> {
    let fwd = arch_period(u)?;
    let back = arch_period(&u.mirror())?;
    Ok(threshold(&fwd, &back))
}

fn threshold(fwd: &PeriodData, back: &PeriodData) -> u64 {
    let len = fwd.length as u64;
    ((fwd.transient + back.transient).div_ceil(len) + fwd.copies).max(1)
}

/// `h(uⁿ)` and `ρ(uⁿ)` with only `O(|A|)` copies of `u` materialised.
pub fn pow_measures(u: &Word, n: u64) -> Result<PowReport> {
    let fwd = arch_period(u)?;
    let back = arch_period(&u.mirror())?;
    let n_min = threshold(&fwd, &back);
    let delta = fwd.copies;
    let (base_exponent, steps) = if n <= n_min + delta {
        (n, 0)
    } else {
        let n0 = n_min + (n - n_min) % delta;
        (n0, (n - n0) / delta)
    };
    let width = u.alphabet().size();
    let letters = u.letters().repeat(base_exponent as usize);
    let bump = steps as u128 * fwd.period as u128;
    Ok(PowReport {
        n,
        h: h_letters(&letters, width).0 as u128 + bump,
        rho: rho_letters(&letters, width).0 as u128 + bump,
        base_exponent,
        steps,
        period: fwd,
    })
}

pub fn h_pow(u: &Word, n: u64) -> Result<u128> {
    Ok(pow_measures(u, n)?.h)
}

pub fn rho_pow(u: &Word, n: u64) -> Result<u128> {
    Ok(pow_measures(u, n)?.rho)
}
