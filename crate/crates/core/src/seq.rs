//! Periodic binary sequences and interleaving shift sequences.

use std::fmt;

use crate::{Error, Result};

/// One period of a binary sequence, packed 64 bits per word, bit `t` of the
/// period at word `t / 64`, position `t % 64`. Padding bits are zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinarySeq {
    period: usize,
    words: Vec<u64>,
}

impl fmt::Debug for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.period <= 128 {
            write!(f, "BinarySeq({})", self.to_ascii())
        } else {
            write!(f, "BinarySeq(period={}, weight={})", self.period, self.weight())
        }
    }
}

impl BinarySeq {
    pub fn zeros(period: usize) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidParameter("period must be at least 1".into()));
        }
        Ok(BinarySeq {
            period,
            words: vec![0; period.div_ceil(64)],
        })
    }

    pub fn from_fn(period: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut s = Self::zeros(period)?;
        for t in 0..period {
            if f(t) {
                s.words[t / 64] |= 1 << (t % 64);
            }
        }
        Ok(s)
    }

    pub fn from_bits<I>(bits: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<u8>,
    {
        let bits: Vec<u8> = bits.into_iter().map(Into::into).collect();
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Parse(format!("bit value {b}")));
        }
        Self::from_fn(bits.len(), |t| bits[t] == 1)
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Bit at index `t mod N`.
    pub fn get(&self, t: usize) -> bool {
        let t = t % self.period;
        self.words[t / 64] >> (t % 64) & 1 == 1
    }

    pub fn bit(&self, t: usize) -> u8 {
        u8::from(self.get(t))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.period).map(move |t| self.get(t))
    }

    /// Left cyclic shift: `result[t] = self[t + by]`.
    pub fn rotate_left(&self, by: usize) -> BinarySeq {
        BinarySeq::from_fn(self.period, |t| self.get(t + by)).expect("nonzero period")
    }

    pub fn complement(&self) -> BinarySeq {
        BinarySeq::from_fn(self.period, |t| !self.get(t)).expect("nonzero period")
    }

    /// `'0'`/`'1'` characters, index 0 first.
    pub fn to_ascii(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    pub fn from_ascii(text: &str) -> Result<Self> {
        let bits = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(Error::Parse(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_bits(bits)
    }

    /// Packed little-endian bytes: bit 0 of byte 0 is `s_0`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let n = self.period.div_ceil(8);
        self.words
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .take(n)
            .collect()
    }

    /// Lower-case hex of [`to_bytes`](Self::to_bytes), first byte first.
    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(period: usize, hex: &str) -> Result<Self> {
        let hex = hex.trim();
        let want = period.div_ceil(8) * 2;
        if hex.len() != want {
            return Err(Error::Parse(format!(
                "hex for period {period} needs {want} digits, got {}",
                hex.len()
            )));
        }
        let bytes = (0..hex.len())
            .step_by(2)
            .map(|i| {
                u8::from_str_radix(&hex[i..i + 2], 16)
                    .map_err(|e| Error::Parse(format!("hex digit pair {:?}: {e}", &hex[i..i + 2])))
            })
            .collect::<Result<Vec<u8>>>()?;
        let s = Self::from_fn(period, |t| bytes[t / 8] >> (t % 8) & 1 == 1)?;
        if s.to_bytes() != bytes {
            return Err(Error::Parse("nonzero padding bits past the period".into()));
        }
        Ok(s)
    }
}

/// A shift amount in `Z_v`, or infinity (the column is the zero sequence).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shift {
    Finite(u32),
    Infinity,
}

impl From<Option<u32>> for Shift {
    fn from(v: Option<u32>) -> Self {
        v.map_or(Shift::Infinity, Shift::Finite)
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shift::Finite(v) => write!(f, "{v}"),
            Shift::Infinity => f.write_str("inf"),
        }
    }
}

/// A sequence over `Z_v ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSeq {
    modulus: u32,
    entries: Vec<Shift>,
}

impl ShiftSeq {
    pub fn new(modulus: u32, entries: Vec<Shift>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("shift modulus must be positive".into()));
        }
        for (index, e) in entries.iter().enumerate() {
            if let Shift::Finite(value) = *e {
                if value >= modulus {
                    return Err(Error::ShiftOutOfRange {
                        index,
                        value,
                        modulus,
                    });
                }
            }
        }
        Ok(ShiftSeq { modulus, entries })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Shift] {
        &self.entries
    }

    pub fn get(&self, j: usize) -> Shift {
        self.entries[j]
    }
}

/// Base, shift and optional indicator sequence of a `(v, w)` interleaved sequence.
#[derive(Clone, Debug)]
pub struct InterleaveSpec {
    base: BinarySeq,
    shifts: ShiftSeq,
    indicator: Option<BinarySeq>,
}

impl InterleaveSpec {
    pub fn new(base: BinarySeq, shifts: ShiftSeq, indicator: Option<BinarySeq>) -> Result<Self> {
        if shifts.modulus() as usize != base.period() {
            return Err(Error::LengthMismatch {
                what: "shift modulus vs base period",
                expected: base.period() as u64,
                actual: u64::from(shifts.modulus()),
            });
        }
        if shifts.is_empty() {
            return Err(Error::InvalidParameter("shift sequence is empty".into()));
        }
        if let Some(ind) = &indicator {
            if ind.period() != shifts.len() {
                return Err(Error::LengthMismatch {
                    what: "indicator period vs shift length",
                    expected: shifts.len() as u64,
                    actual: ind.period() as u64,
                });
            }
        }
        Ok(InterleaveSpec {
            base,
            shifts,
            indicator,
        })
    }

    pub fn base(&self) -> &BinarySeq {
        &self.base
    }

    pub fn shifts(&self) -> &ShiftSeq {
        &self.shifts
    }

    pub fn indicator(&self) -> Option<&BinarySeq> {
        self.indicator.as_ref()
    }

    /// Rows `v` and columns `w` of the interleaving matrix.
    pub fn dims(&self) -> (usize, usize) {
        (self.base.period(), self.shifts.len())
    }
}
