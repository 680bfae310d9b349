use num_integer::Integer;

use crate::algebra::{GroupTable, Presentation, SourceGroup};
use crate::caps::Caps;
use crate::cohomology::coboundary;
use crate::error::{Error, Result};

use super::cochain::Cochain;
use super::module::PModule;

/// Algebraic 2-type `(π₁, π₂, k)`: a finite group, a finite `π₁`-module and
/// a normalized 3-cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoType {
    pub pi1: GroupTable,
    pub pi2: PModule,
    pub k: Cochain,
}

/// Unvalidated 2-type data as read from a file.
#[derive(Clone, Debug)]
pub struct RawTwoType {
    pub pi1: SourceGroup,
    pub factors: Vec<u64>,
    /// Per element of a table `π₁`, per generator of a presented one;
    /// `None` for the trivial action.
    pub action: Option<Vec<Vec<Vec<i64>>>>,
    pub k: Vec<(Vec<usize>, Vec<i64>)>,
}

impl TwoType {
    pub fn new(pi1: GroupTable, pi2: PModule, k: Cochain) -> Result<Self> {
        if pi2.p_order() != pi1.order() || k.p_order() != pi1.order() || k.degree() != 3 {
            return Err(Error::malformed("2-type components do not match"));
        }
        check_cocycle(&pi1, &pi2, &k)?;
        Ok(TwoType { pi1, pi2, k })
    }

    /// `(π₁, π₂, 0)`.
    pub fn split(pi1: GroupTable, pi2: PModule) -> Self {
        let k = Cochain::zero(pi1.order(), &pi2, 3);
        TwoType { pi1, pi2, k }
    }
}

fn check_cocycle(p: &GroupTable, a: &PModule, c: &Cochain) -> Result<()> {
    let d = coboundary(p, a, c);
    match d.entries().into_iter().next() {
        Some((tuple, _)) => Err(Error::NotACocycle(tuple)),
        None => Ok(()),
    }
}

/// Realizes a presentation as a table without coset enumeration. Only the
/// cases where the group is visibly cyclic are handled: no generators, or
/// one generator (the group is then `Z/gcd` of the relator exponent sums).
/// Returns the table and the element of each generator.
pub fn realize_presentation(p: &Presentation, caps: &Caps) -> Result<(GroupTable, Vec<usize>)> {
    match p.n_generators() {
        0 => Ok((GroupTable::trivial(), vec![])),
        1 => {
            let n = p
                .relators()
                .iter()
                .map(|w| w.iter().map(|&l| l.signum() as i64).sum::<i64>().unsigned_abs())
                .fold(0u64, |acc, e| acc.gcd(&e));
            if n == 0 {
                return Err(Error::PresentationNotRealizable("infinite cyclic group".into()));
            }
            Caps::check("realized table order", n as u128, caps.table_order as u128)?;
            let gen = if n == 1 { 0 } else { 1 };
            Ok((GroupTable::cyclic(n as usize), vec![gen]))
        }
        k => Err(Error::PresentationNotRealizable(format!(
            "{k} generators; only cyclic presentations are realized"
        ))),
    }
}

pub fn validate_two_type(raw: &RawTwoType, caps: &Caps) -> Result<TwoType> {
    let (pi1, gens) = match &raw.pi1 {
        SourceGroup::Table(t) => (t.clone(), None),
        SourceGroup::Presentation(p) => {
            let (t, g) = realize_presentation(p, caps)?;
            (t, Some(g))
        }
    };
    let pi2 = match (&raw.action, gens) {
        (None, _) => PModule::trivial(pi1.order(), raw.factors.clone())?,
        (Some(m), None) => PModule::new(&pi1, raw.factors.clone(), m)?,
        (Some(m), Some(g)) => PModule::from_generators(&pi1, &g, raw.factors.clone(), m)?,
    };
    pi2.check_invertible()?;
    let k = Cochain::from_entries(pi1.order(), &pi2, 3, &raw.k)?;
    TwoType::new(pi1, pi2, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(action: Option<Vec<Vec<Vec<i64>>>>, k: Vec<(Vec<usize>, Vec<i64>)>) -> RawTwoType {
        RawTwoType { pi1: SourceGroup::Table(GroupTable::cyclic(2)), factors: vec![2], action, k }
    }

    #[test]
    fn zero_k_is_valid() {
        let t = validate_two_type(&raw(None, vec![]), &Caps::default()).unwrap();
        assert!(t.k.is_zero());
    }

    #[test]
    fn nonzero_k_on_z2_is_a_cocycle() {
        let t = validate_two_type(&raw(None, vec![(vec![1, 1, 1], vec![1])]), &Caps::default()).unwrap();
        assert!(!t.k.is_zero());
    }

    #[test]
    fn non_invertible_action() {
        let err = validate_two_type(&raw(Some(vec![vec![vec![1]], vec![vec![0]]]), vec![]), &Caps::default());
        assert!(matches!(err, Err(Error::ActionNotHomomorphic(_))));
    }

    #[test]
    fn non_cocycle_rejected() {
        // Z/3 with k = 1 on (1,1,1) only is not closed
        let r = RawTwoType {
            pi1: SourceGroup::Table(GroupTable::cyclic(3)),
            factors: vec![3],
            action: None,
            k: vec![(vec![1, 1, 1], vec![1])],
        };
        assert!(matches!(validate_two_type(&r, &Caps::default()), Err(Error::NotACocycle(_))));
    }

    #[test]
    fn presented_pi1() {
        let r = RawTwoType {
            pi1: SourceGroup::Presentation(Presentation::cyclic(2)),
            factors: vec![3],
            action: Some(vec![vec![vec![-1]]]),
            k: vec![],
        };
        let t = validate_two_type(&r, &Caps::default()).unwrap();
        assert_eq!(t.pi1.order(), 2);
        assert_eq!(t.pi2.act(1, &[1]), vec![2]);

        let free = RawTwoType { pi1: SourceGroup::Presentation(Presentation::free(1)), ..r.clone() };
        assert!(matches!(
            validate_two_type(&free, &Caps::default()),
            Err(Error::PresentationNotRealizable(_))
        ));
        let two = RawTwoType { pi1: SourceGroup::Presentation(Presentation::free(2)), ..r };
        assert!(matches!(
            validate_two_type(&two, &Caps::default()),
            Err(Error::PresentationNotRealizable(_))
        ));
    }
}
