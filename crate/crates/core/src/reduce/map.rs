use std::fmt;
use std::str::FromStr;

/// Which gadget block a position of the emitted `M` or `A` belongs to.
///
/// For the X3C reduction `i` is the copy index, `j` the triple/row and `k`
/// the slot within the row. For the co-HC reduction `i` and `j` are the two
/// subscripts of the gadget and `r` indexes the neighbor in a post-link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gadget {
    T { i: usize, j: usize, k: usize },
    P { i: usize, j: usize, k: usize },
    L { i: usize, j: usize, k: usize },
    H { i: usize, j: usize, k: usize },
    MSelection { i: usize, j: usize },
    ASelection { i: usize, j: usize },
    MPreLink { i: usize, j: usize },
    APreLink { i: usize, j: usize },
    MPostLink { i: usize, j: usize },
    APostLink { i: usize, j: usize, r: usize },
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Gadget::*;
        match *self {
            T { i, j, k } => write!(f, "T_{i}_{j}_{k}"),
            P { i, j, k } => write!(f, "P_{i}_{j}_{k}"),
            L { i, j, k } => write!(f, "L_{i}_{j}_{k}"),
            H { i, j, k } => write!(f, "H_{i}_{j}_{k}"),
            MSelection { i, j } => write!(f, "MSelection_{i}_{j}"),
            ASelection { i, j } => write!(f, "ASelection_{i}_{j}"),
            MPreLink { i, j } => write!(f, "MPreLink_{i}_{j}"),
            APreLink { i, j } => write!(f, "APreLink_{i}_{j}"),
            MPostLink { i, j } => write!(f, "MPostLink_{i}_{j}"),
            APostLink { i, j, r } => write!(f, "APostLink_{i}_{j}_{r}"),
        }
    }
}

impl FromStr for Gadget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split('_');
        let head = parts.next().unwrap_or_default();
        let nums = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| format!("bad gadget subscript in {s:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        use Gadget::*;
        let g = match (head, nums.as_slice()) {
            ("T", &[i, j, k]) => T { i, j, k },
            ("P", &[i, j, k]) => P { i, j, k },
            ("L", &[i, j, k]) => L { i, j, k },
            ("H", &[i, j, k]) => H { i, j, k },
            ("MSelection", &[i, j]) => MSelection { i, j },
            ("ASelection", &[i, j]) => ASelection { i, j },
            ("MPreLink", &[i, j]) => MPreLink { i, j },
            ("APreLink", &[i, j]) => APreLink { i, j },
            ("MPostLink", &[i, j]) => MPostLink { i, j },
            ("APostLink", &[i, j, r]) => APostLink { i, j, r },
            _ => return Err(format!("unknown gadget {s:?}")),
        };
        Ok(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    X3c { q: usize, m: usize },
    Cohc { n: usize },
}

/// Position bookkeeping for a reduced instance: one gadget tag per position
/// of `M` and of `A`, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMap {
    pub kind: ReductionKind,
    pub m_tags: Vec<Gadget>,
    pub a_tags: Vec<Gadget>,
}

impl ReductionMap {
    /// Gadget of 1-based M position `pos`.
    pub fn m_gadget(&self, pos: usize) -> Option<Gadget> {
        pos.checked_sub(1).and_then(|i| self.m_tags.get(i)).copied()
    }

    pub fn a_gadget(&self, pos: usize) -> Option<Gadget> {
        pos.checked_sub(1).and_then(|i| self.a_tags.get(i)).copied()
    }

    /// 1-based A positions of the block `P^(i)_j` (X3C maps only).
    pub fn p_block_positions(&self, i: usize, j: usize) -> Vec<usize> {
        self.a_tags
            .iter()
            .enumerate()
            .filter(|(_, g)| matches!(g, Gadget::P { i: gi, j: gj, .. } if *gi == i && *gj == j))
            .map(|(p, _)| p + 1)
            .collect()
    }

    pub fn position_of_m(&self, g: Gadget) -> Option<usize> {
        self.m_tags.iter().position(|&t| t == g).map(|p| p + 1)
    }

    pub fn position_of_a(&self, g: Gadget) -> Option<usize> {
        self.a_tags.iter().position(|&t| t == g).map(|p| p + 1)
    }
}

/// Second subscript of a gadget identifier such as `P_3_5` or `s_2_4`.
pub fn beta(id: &str) -> Option<usize> {
    let mut parts = id.split('_');
    parts.next()?;
    parts.next()?.parse::<usize>().ok()?;
    let j = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_names_round_trip() {
        let tags = [
            Gadget::T { i: 1, j: 2, k: 3 },
            Gadget::P { i: 2, j: 4, k: 1 },
            Gadget::L { i: 1, j: 2, k: 2 },
            Gadget::H { i: 1, j: 1, k: 3 },
            Gadget::MSelection { i: 3, j: 1 },
            Gadget::ASelection { i: 3, j: 1 },
            Gadget::MPreLink { i: 1, j: 2 },
            Gadget::APreLink { i: 1, j: 2 },
            Gadget::MPostLink { i: 2, j: 2 },
            Gadget::APostLink { i: 2, j: 3, r: 1 },
        ];
        for t in tags {
            assert_eq!(t.to_string().parse::<Gadget>(), Ok(t));
        }
        assert!("Q_1_2".parse::<Gadget>().is_err());
        assert!("P_1_2".parse::<Gadget>().is_err());
    }

    #[test]
    fn beta_projection() {
        assert_eq!(beta("P_3_5"), Some(5));
        assert_eq!(beta("p_1_2"), Some(2));
        assert_eq!(beta("S_10_4"), Some(4));
        assert_eq!(beta("v_1_2_3"), None);
        assert_eq!(beta("b_3"), None);
    }
}
