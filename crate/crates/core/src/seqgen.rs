//! Sequence constructions: m-sequences, their `(2^k - 1, 2^k + 1)`
//! interleaved form, the `Z_4` shift matrix and the Yu-Gong sequence.
//!
//! Every interleaved sequence is read row-major out of its `v x w` matrix:
//! `s[i*w + j] = base[(i + e_j) mod v] ^ indicator[j]`.

use std::fmt;

use crate::gf2k::{build_field, FieldContext, FieldElem};
use crate::seq::{BinarySeq, InterleaveSpec, Shift, ShiftSeq};
use crate::{Error, Result};

/// Largest `k` whose field GF(2^(2k)) fits the exp/log table limit.
pub const MAX_K: u32 = crate::gf2k::TABLE_DEGREE_LIMIT / 2;

/// The sign parameter of the shift matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Delta {
    #[default]
    Plus,
    Minus,
}

impl Delta {
    pub fn value(self) -> i64 {
        match self {
            Delta::Plus => 1,
            Delta::Minus => -1,
        }
    }

    /// `delta mod 4`.
    fn residue(self) -> u32 {
        match self {
            Delta::Plus => 1,
            Delta::Minus => 3,
        }
    }
}

impl TryFrom<i64> for Delta {
    type Error = Error;

    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Delta::Plus),
            -1 => Ok(Delta::Minus),
            other => Err(Error::InvalidDelta(other)),
        }
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `b_t = Tr_1^n(alpha^t)` for `t` in `[0, 2^n - 2]`.
pub fn m_sequence(ctx: &FieldContext) -> BinarySeq {
    let n = ctx.degree();
    BinarySeq::from_fn(ctx.order() as usize, |t| {
        let tr = ctx
            .trace(1, ctx.exp_of(t as u64))
            .expect("absolute trace is always defined");
        tr == FieldElem::ONE
    })
    .unwrap_or_else(|_| unreachable!("GF(2^{n}) has a nonempty multiplicative group"))
}

fn check_k(k: u32, min: u32) -> Result<()> {
    if k < min || k > MAX_K {
        return Err(Error::InvalidParameter(format!(
            "k = {k} outside supported range {min}..={MAX_K}"
        )));
    }
    Ok(())
}

fn check_field_degree(k: u32, ctx: &FieldContext) -> Result<()> {
    if ctx.degree() != 2 * k {
        return Err(Error::LengthMismatch {
            what: "field degree vs 2k",
            expected: u64::from(2 * k),
            actual: u64::from(ctx.degree()),
        });
    }
    Ok(())
}

/// Splits the m-sequence of GF(2^(2k)) into base `a'` (the m-sequence of
/// GF(2^k) generated by `beta = alpha^(2^k + 1)`) and shift sequence `e'`
/// with `e'_0 = ∞` and `beta^(e'_j) = Tr_k^(2k)(alpha^j)`.
pub fn decompose_m_sequence(k: u32, ctx: &FieldContext) -> Result<(BinarySeq, ShiftSeq)> {
    check_k(k, 2)?;
    check_field_degree(k, ctx)?;
    let rows = (1u64 << k) - 1;
    let cols = (1u64 << k) + 1;
    let beta = ctx.exp_of(cols);

    let mut beta_i = FieldElem::ONE;
    let mut base_bits = Vec::with_capacity(rows as usize);
    for _ in 0..rows {
        base_bits.push(u8::from(ctx.trace_over(beta_i, 1, k)? == FieldElem::ONE));
        beta_i = ctx.mul(beta_i, beta);
    }
    let base = BinarySeq::from_bits(base_bits)?;

    let mut shifts = Vec::with_capacity(cols as usize);
    shifts.push(Shift::Infinity);
    for j in 1..cols {
        let rel = ctx.trace(k, ctx.exp_of(j))?;
        let log = ctx.dlog(rel).ok_or(Error::ZeroRelativeTrace(j))?;
        // rel lies in GF(2^k)*, the subgroup generated by beta
        debug_assert_eq!(u64::from(log) % cols, 0);
        shifts.push(Shift::Finite((u64::from(log) / cols) as u32));
    }
    Ok((base, ShiftSeq::new(rows as u32, shifts)?))
}

/// The `(2^k - 1) x (2^k + 1)` shift matrix over `Z_4`, flattened row-major:
/// `e[i(2^k+1) + j]` is `3i + delta` for `j = 0` and `3(i + j)` otherwise.
pub fn shift_matrix(k: u32, delta: Delta) -> Result<ShiftSeq> {
    check_k(k, 1)?;
    let rows = (1u32 << k) - 1;
    let cols = (1u32 << k) + 1;
    let mut entries = Vec::with_capacity((rows * cols) as usize);
    for i in 0..rows {
        for j in 0..cols {
            let e = if j == 0 {
                (3 * i + delta.residue()) % 4
            } else {
                3 * ((i + j) % 4) % 4
            };
            entries.push(Shift::Finite(e));
        }
    }
    ShiftSeq::new(4, entries)
}

/// Row-major read-out of the interleaving matrix, plus the indicator.
pub fn interleave(spec: &InterleaveSpec) -> BinarySeq {
    let (v, w) = spec.dims();
    let base = spec.base();
    let shifts = spec.shifts().entries();
    let indicator = spec.indicator();
    BinarySeq::from_fn(v * w, |t| {
        let (i, j) = (t / w, t % w);
        let col = match shifts[j] {
            Shift::Finite(e) => base.get(i + e as usize),
            Shift::Infinity => false,
        };
        col ^ indicator.is_some_and(|b| b.get(j))
    })
    .expect("dims are positive")
}

/// A generated Yu-Gong sequence with its construction parameters.
#[derive(Clone, Debug)]
pub struct YuGong {
    pub k: u32,
    pub delta: Delta,
    pub modulus: u64,
    pub seq: BinarySeq,
    /// `false` for `k = 1`, where the four-valued autocorrelation law and the
    /// complexity bound are not claimed.
    pub in_theorem_scope: bool,
}

impl YuGong {
    pub fn period(&self) -> usize {
        self.seq.period()
    }
}

/// The perfect sequence `(0, 1, 1, 1)`.
pub fn perfect_base() -> BinarySeq {
    BinarySeq::from_bits([0u8, 1, 1, 1]).expect("literal")
}

/// Builds the Yu-Gong sequence of period `4(2^(2k) - 1)`: base `(0,1,1,1)`,
/// shifts from [`shift_matrix`], indicator the m-sequence of GF(2^(2k)).
///
/// Without a context the default field of degree `2k` is used.
pub fn yu_gong(k: u32, delta: Delta, ctx: Option<&FieldContext>) -> Result<YuGong> {
    check_k(k, 1)?;
    let owned;
    let ctx = match ctx {
        Some(c) => {
            check_field_degree(k, c)?;
            c
        }
        None => {
            owned = build_field(2 * k, None)?;
            &owned
        }
    };
    let spec = InterleaveSpec::new(
        perfect_base(),
        shift_matrix(k, delta)?,
        Some(m_sequence(ctx)),
    )?;
    Ok(YuGong {
        k,
        delta,
        modulus: ctx.modulus(),
        seq: interleave(&spec),
        in_theorem_scope: k >= 2,
    })
}
