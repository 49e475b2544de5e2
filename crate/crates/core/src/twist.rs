//! The twist knot `J(2,2q)`: Riley polynomial, trace polynomials and the
//! closed-form twisted Alexander polynomial at a parabolic representation.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::quadring::{embed_trace, geometric_sum, norm, trace_w};

/// Sequence obeying `f_k = (u²+2) f_{k−1} − f_{k−2}`, cached for `k ≥ 0`.
struct Recurrence {
    table: RwLock<Vec<IntPolynomial>>,
}

impl Recurrence {
    fn new(f0: IntPolynomial, f1: IntPolynomial) -> Self {
        Self { table: RwLock::new(vec![f0, f1]) }
    }

    fn get(&self, k: usize) -> IntPolynomial {
        if let Some(p) = self.table.read().expect("poisoned").get(k) {
            return p.clone();
        }
        let mut table = self.table.write().expect("poisoned");
        let x = trace_w();
        while table.len() <= k {
            let n = table.len();
            let next = &(&x * &table[n - 1]) - &table[n - 2];
            table.push(next);
        }
        table[k].clone()
    }
}

fn s_table() -> &'static Recurrence {
    static S: OnceLock<Recurrence> = OnceLock::new();
    S.get_or_init(|| Recurrence::new(IntPolynomial::zero(), IntPolynomial::one()))
}

fn tau_table() -> &'static Recurrence {
    static TAU: OnceLock<Recurrence> = OnceLock::new();
    TAU.get_or_init(|| Recurrence::new(IntPolynomial::from_i64s(&[2]), trace_w()))
}

fn check_q(q: i64) -> Result<()> {
    if q == 0 {
        Err(Error::InvalidQ(q))
    } else {
        Ok(())
    }
}

/// `S_k = (λ₊^k − λ₋^k)/(λ₊ − λ₋)`, with `S_{−k} = −S_k`.
pub fn chebyshev_s(k: i64) -> IntPolynomial {
    let s = s_table().get(k.unsigned_abs() as usize);
    if k < 0 {
        -s
    } else {
        s
    }
}

/// `τ_k = tr ρ(w^k) = λ₊^k + λ₋^k`, even in `k`.
pub fn trace_tau(k: i64) -> IntPolynomial {
    tau_table().get(k.unsigned_abs() as usize)
}

/// Riley polynomial `φ_q = (1−u)·S_q − S_{q−1}` of `J(2,2q)`.
pub fn riley(q: i64) -> Result<IntPolynomial> {
    check_q(q)?;
    let one_minus_u = IntPolynomial::from_i64s(&[1, -1]);
    Ok(&(&one_minus_u * &chebyshev_s(q)) - &chebyshev_s(q - 1))
}

/// `Δ(t) = γ + δt + γt²` with coefficients in `Z[u]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedAlexander {
    pub q: i64,
    pub gamma: IntPolynomial,
    pub delta: IntPolynomial,
}

impl TwistedAlexander {
    /// Coefficients of `1, t, t²`.
    pub fn coefficients(&self) -> [&IntPolynomial; 3] {
        [&self.gamma, &self.delta, &self.gamma]
    }
}

/// Closed form at a parabolic representation, computed without radicals.
///
/// With `A = a + bλ` the geometric sum, `γ = N(A)` and
/// `δ = Tr(A) − 2γ + b·u²`. The last term is
/// `(λ₊−λ₋)/(2+λ₊+λ₋)·(α−β)` after using `(λ₊−λ₋)² = u²(2+λ₊+λ₋)`.
pub fn twisted_alexander(q: i64) -> Result<TwistedAlexander> {
    let sum = geometric_sum(q)?;
    let gamma = norm(&sum);
    let delta = &(&embed_trace(&sum) - &gamma.scale(&BigInt::from(2))) + &sum.b.shift(2);
    Ok(TwistedAlexander { q, gamma, delta })
}

/// Second route to `γ_q`: `(τ_q − 2) / u²`.
pub fn gamma_via_trace(q: i64) -> Result<IntPolynomial> {
    check_q(q)?;
    let numer = &trace_tau(q) - &IntPolynomial::from_i64s(&[2]);
    numer.divexact(&IntPolynomial::monomial(BigInt::from(1), 2))
}

/// Classical Alexander polynomial `q − (2q−1)t + qt²` as `(c₀, c₁, c₂)`.
pub fn classical_alexander(q: i64) -> (i64, i64, i64) {
    (q, -(2 * q - 1), q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotFacts {
    pub q: i64,
    pub genus: u32,
    pub fibered: bool,
    pub hyperbolic: bool,
    pub alexander: (i64, i64, i64),
}

pub fn knot_facts(q: i64) -> Result<KnotFacts> {
    check_q(q)?;
    Ok(KnotFacts { q, genus: 1, fibered: q.abs() == 1, hyperbolic: q != 1, alexander: classical_alexander(q) })
}

/// Knot label `J(2,2q)`.
pub fn knot_label(q: i64) -> String {
    format!("J(2,{})", 2 * q)
}
