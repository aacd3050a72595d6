use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// Alphabet a variable belongs to.
///
/// The declaration order is the global variable order: `Q < X < Y < U < V < W`,
/// and within one alphabet variables are ordered by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    Q,
    X,
    Y,
    U,
    V,
    W,
}

impl VarKind {
    fn letter(self) -> char {
        match self {
            VarKind::Q => 'q',
            VarKind::X => 'x',
            VarKind::Y => 'y',
            VarKind::U => 'u',
            VarKind::V => 'v',
            VarKind::W => 'w',
        }
    }
}

const INDEX_BITS: u32 = 12;
const INDEX_MASK: u16 = (1 << INDEX_BITS) - 1;

/// Largest admissible index inside one alphabet.
pub const MAX_INDEX: u32 = INDEX_MASK as u32;

/// A polynomial indeterminate: `q`, or `x_i`, `y_i`, `u_i`, `v_i`, `w_i` with `i >= 1`.
///
/// Packed into 16 bits so the derived order is the global variable order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u16);

impl Var {
    fn pack(kind: VarKind, index: u32) -> Var {
        assert!(
            (1..=MAX_INDEX).contains(&index),
            "variable index {index} out of range"
        );
        Var(((kind as u16) << INDEX_BITS) | index as u16)
    }

    pub fn q() -> Var {
        Var(0)
    }

    pub fn x(i: u32) -> Var {
        Var::pack(VarKind::X, i)
    }

    pub fn y(i: u32) -> Var {
        Var::pack(VarKind::Y, i)
    }

    pub fn u(i: u32) -> Var {
        Var::pack(VarKind::U, i)
    }

    pub fn v(i: u32) -> Var {
        Var::pack(VarKind::V, i)
    }

    pub fn w(i: u32) -> Var {
        Var::pack(VarKind::W, i)
    }

    pub fn new(kind: VarKind, index: u32) -> Var {
        match kind {
            VarKind::Q => Var::q(),
            k => Var::pack(k, index),
        }
    }

    pub fn kind(self) -> VarKind {
        match self.0 >> INDEX_BITS {
            0 => VarKind::Q,
            1 => VarKind::X,
            2 => VarKind::Y,
            3 => VarKind::U,
            4 => VarKind::V,
            _ => VarKind::W,
        }
    }

    /// Index inside the alphabet; `None` for `q`.
    pub fn index(self) -> Option<u32> {
        match self.kind() {
            VarKind::Q => None,
            _ => Some((self.0 & INDEX_MASK) as u32),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            None => write!(f, "q"),
            Some(i) => write!(f, "{}{}", self.kind().letter(), i),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Var, AlgebraError> {
        let bad = || AlgebraError::Parse(format!("not a variable name: {s:?}"));
        let mut chars = s.chars();
        let kind = match chars.next().ok_or_else(bad)? {
            'q' => VarKind::Q,
            'x' => VarKind::X,
            'y' => VarKind::Y,
            'u' => VarKind::U,
            'v' => VarKind::V,
            'w' => VarKind::W,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if kind == VarKind::Q {
            return if rest.is_empty() { Ok(Var::q()) } else { Err(bad()) };
        }
        let index: u32 = rest.parse().map_err(|_| bad())?;
        if index == 0 || index > MAX_INDEX {
            return Err(bad());
        }
        Ok(Var::new(kind, index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_by_alphabet_then_index() {
        let mut vs = [Var::w(1), Var::x(2), Var::v(3), Var::q(), Var::x(1), Var::u(9), Var::y(4)];
        vs.sort();
        let names: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["q", "x1", "x2", "y4", "u9", "v3", "w1"]);
    }

    #[test]
    fn parse_round_trip() {
        for name in ["q", "x1", "y12", "u3", "v4095", "w7"] {
            let v: Var = name.parse().unwrap();
            assert_eq!(v.to_string(), name);
        }
        assert!("x0".parse::<Var>().is_err());
        assert!("z1".parse::<Var>().is_err());
        assert!("q1".parse::<Var>().is_err());
    }
}
