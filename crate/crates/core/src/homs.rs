//! Homomorphisms out of IN∞ and the non-finite-generation witness.
//!
//! * [`extend_in`] embeds IN∞ into the cofinite monotone partial bijections of
//!   ℤ by gluing the identity on `(−∞, n]` below the map.
//! * [`hom_translation`], [`hom_z2`] and [`hom_annihilating`] realise the three
//!   kinds of image a homomorphism IN∞ → ID∞ can have.
//! * [`eps_conjugation`] and [`refute_finite_generation`] are the constructive
//!   pieces behind the generating-set results for IN∞.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::int::ElemID;
use crate::iso_z::IsoZ;
use crate::nat::ElemIN;
use crate::sets::FiniteIntSet;

/// A cofinite partial bijection of ℤ that is a shift near each end.
///
/// `x ↦ x + neg_shift` for `x ≤ neg_threshold`, `x ↦ x + pos_shift` for
/// `x ≥ pos_threshold`, and between the thresholds the map is the explicit
/// `middle` list (points of the window not listed are outside the domain).
///
/// Values are kept canonical: `pos_threshold` is the least point from which
/// the positive rule holds, and `neg_threshold` the greatest point below it up
/// to which the negative rule holds. A full shift of ℤ is split as
/// `(−∞, 0] ∪ [1, ∞)`. Derived equality is therefore equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteTailMap {
    neg_threshold: i64,
    neg_shift: i64,
    pos_threshold: i64,
    pos_shift: i64,
    middle: Vec<(i64, i64)>,
}

impl FiniteTailMap {
    pub fn identity() -> Self {
        FiniteTailMap { neg_threshold: 0, neg_shift: 0, pos_threshold: 1, pos_shift: 0, middle: Vec::new() }
    }

    /// Builds and canonicalises a map, rejecting anything that is not injective.
    pub fn new(neg: (i64, i64), pos: (i64, i64), middle: Vec<(i64, i64)>) -> Result<Self> {
        let (tn, sn) = neg;
        let (tp, sp) = pos;
        let bad = |msg: String| Err(Error::InvalidTailMap(msg));
        if tn >= tp {
            return bad(format!("negative threshold {tn} must lie below positive threshold {tp}"));
        }
        if tn + sn >= tp + sp {
            return bad("tail images overlap".to_owned());
        }
        let mut middle = middle;
        middle.sort_unstable();
        for w in middle.windows(2) {
            if w[0].0 == w[1].0 {
                return bad(format!("input {} listed twice", w[0].0));
            }
        }
        for &(x, y) in &middle {
            if x <= tn || x >= tp {
                return bad(format!("middle input {x} is not strictly between the thresholds"));
            }
            if y <= tn + sn || y >= tp + sp {
                return bad(format!("middle output {y} collides with a tail image"));
            }
        }
        let mut outputs: Vec<i64> = middle.iter().map(|&(_, y)| y).collect();
        outputs.sort_unstable();
        if outputs.windows(2).any(|w| w[0] == w[1]) {
            return bad("middle is not injective".to_owned());
        }
        Ok(FiniteTailMap { neg_threshold: tn, neg_shift: sn, pos_threshold: tp, pos_shift: sp, middle }.canonical())
    }

    pub fn neg(&self) -> (i64, i64) {
        (self.neg_threshold, self.neg_shift)
    }

    pub fn pos(&self) -> (i64, i64) {
        (self.pos_threshold, self.pos_shift)
    }

    pub fn middle(&self) -> &[(i64, i64)] {
        &self.middle
    }

    pub fn apply(&self, x: i64) -> Option<i64> {
        if x <= self.neg_threshold {
            Some(x + self.neg_shift)
        } else if x >= self.pos_threshold {
            Some(x + self.pos_shift)
        } else {
            self.middle.binary_search_by_key(&x, |&(input, _)| input).ok().map(|i| self.middle[i].1)
        }
    }

    fn canonical(self) -> Self {
        let (tn, sn, tp, sp) = (self.neg_threshold, self.neg_shift, self.pos_threshold, self.pos_shift);
        let full_shift =
            sn == sp && self.middle.len() as i64 == tp - tn - 1 && self.middle.iter().all(|&(x, y)| y == x + sp);
        if full_shift {
            return FiniteTailMap {
                neg_threshold: 0,
                neg_shift: sn,
                pos_threshold: 1,
                pos_shift: sp,
                middle: Vec::new(),
            };
        }
        let mut new_tp = tp;
        while self.apply(new_tp - 1) == Some(new_tp - 1 + sp) {
            new_tp -= 1;
        }
        let mut new_tn = tn;
        while new_tn + 1 < new_tp && self.apply(new_tn + 1) == Some(new_tn + 1 + sn) {
            new_tn += 1;
        }
        let middle = self.middle.into_iter().filter(|&(x, _)| x > new_tn && x < new_tp).collect();
        FiniteTailMap { neg_threshold: new_tn, neg_shift: sn, pos_threshold: new_tp, pos_shift: sp, middle }
    }

    /// `self` followed by `then`.
    pub fn compose(&self, then: &FiniteTailMap) -> FiniteTailMap {
        let tn = self.neg_threshold.min(then.neg_threshold - self.neg_shift);
        let tp = self.pos_threshold.max(then.pos_threshold - self.pos_shift);
        let middle = (tn + 1..tp).filter_map(|x| self.apply(x).and_then(|y| then.apply(y)).map(|z| (x, z))).collect();
        FiniteTailMap {
            neg_threshold: tn,
            neg_shift: self.neg_shift + then.neg_shift,
            pos_threshold: tp,
            pos_shift: self.pos_shift + then.pos_shift,
            middle,
        }
        .canonical()
    }

    /// Order preservation on the whole domain.
    pub fn is_monotone(&self) -> bool {
        let last_neg = self.neg_threshold + self.neg_shift;
        let first_pos = self.pos_threshold + self.pos_shift;
        std::iter::once(last_neg)
            .chain(self.middle.iter().map(|&(_, y)| y))
            .chain(std::iter::once(first_pos))
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[0] < w[1])
    }
}

impl fmt::Debug for FiniteTailMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(x<={}: {:+}; {:?}; x>={}: {:+})",
            self.neg_threshold, self.neg_shift, self.middle, self.pos_threshold, self.pos_shift
        )
    }
}

#[derive(Serialize, Deserialize)]
struct TailMapRepr {
    neg: (i64, i64),
    pos: (i64, i64),
    #[serde(default)]
    middle: Vec<(i64, i64)>,
}

impl Serialize for FiniteTailMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TailMapRepr { neg: self.neg(), pos: self.pos(), middle: self.middle.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteTailMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TailMapRepr::deserialize(deserializer)?;
        FiniteTailMap::new(raw.neg, raw.pos, raw.middle).map_err(serde::de::Error::custom)
    }
}

/// Extends `gamma` to ℤ by the identity on `(−∞, n]`, leaving `n+1..=0`
/// and the exceptions of `gamma` outside the domain.
pub fn extend_in(gamma: &ElemIN, n: i64) -> Result<FiniteTailMap> {
    if n > 0 {
        return Err(Error::InvalidExtensionPoint(n));
    }
    let tail = gamma.markers().nd_high;
    let middle = (1..tail).filter_map(|x| gamma.apply(x).map(|y| (x, y))).collect();
    Ok(FiniteTailMap { neg_threshold: n, neg_shift: 0, pos_threshold: tail, pos_shift: gamma.shift(), middle }
        .canonical())
}

/// Homomorphism IN∞ → ID∞ with image ℤ(+): `γ ↦` translation by `σ(γ)`.
pub fn hom_translation(gamma: &ElemIN) -> ElemID {
    ElemID::from_unit(IsoZ::translation(gamma.sigma()))
}

/// Homomorphism IN∞ → ID∞ with image ℤ₂: parity of `σ(γ)`, odd going to `x ↦ −x`.
pub fn hom_z2(gamma: &ElemIN) -> ElemID {
    if gamma.sigma().rem_euclid(2) == 0 {
        ElemID::identity()
    } else {
        ElemID::from_unit(IsoZ::reflection(0))
    }
}

/// The constant homomorphism onto the identity.
pub fn hom_annihilating(_gamma: &ElemIN) -> ElemID {
    ElemID::identity()
}

/// Evaluates `α^(k−l) ε^[k] β^(k−l)`, which equals `ε^[l]`.
pub fn eps_conjugation(k: i64, l: i64) -> Result<ElemIN> {
    if l < 2 || l >= k {
        return Err(Error::InvalidIndices { k, l });
    }
    let d = k - l;
    let mut out = ElemIN::identity();
    for _ in 0..d {
        out = out.compose(&ElemIN::alpha());
    }
    out = out.compose(&ElemIN::eps(k)?);
    for _ in 0..d {
        out = out.compose(&ElemIN::beta());
    }
    Ok(out)
}

/// An element whose gap exceeds every gap available from a generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub element: ElemIN,
    pub bound_k: i64,
    pub certificate: i64,
}

/// Produces an element of IN∞ that the finite set `gens` cannot generate.
///
/// With `k` the largest gap among the generators, products of generators keep
/// gap at most `k`, while the identity of `{1} ∪ [k+2, ∞)` has gap `k + 1`.
/// Gap 1 never occurs, so `k` is raised to at least 1 to keep the certificate
/// equal to `k + 1`.
pub fn refute_finite_generation(gens: &[ElemIN]) -> Result<Witness> {
    let k = gens.iter().map(ElemIN::gap).max().ok_or(Error::EmptyGenerators)?.max(1);
    let element = ElemIN::new_unchecked(0, FiniteIntSet::range(2, k + 1));
    let certificate = element.gap();
    Ok(Witness { element, bound_k: k, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(shift: i64, exc: &[i64]) -> ElemIN {
        ElemIN::new(shift, exc.iter().copied().collect()).unwrap()
    }

    /// Direct pointwise definition of the extension.
    fn extended(gamma: &ElemIN, n: i64, x: i64) -> Option<i64> {
        if x <= n {
            Some(x)
        } else {
            gamma.apply(x)
        }
    }

    #[test]
    fn extend_examples() {
        let f = extend_in(&ElemIN::alpha(), 0).unwrap();
        assert_eq!((f.neg(), f.pos(), f.middle()), ((0, 0), (1, 1), &[][..]));
        assert_eq!(extend_in(&ElemIN::identity(), 0).unwrap(), FiniteTailMap::identity());
        let f = extend_in(&el(2, &[1, 3]), -1).unwrap();
        assert_eq!((f.neg(), f.pos(), f.middle()), ((-1, 0), (4, 2), &[(2, 4)][..]));
        for x in -5..10 {
            assert_eq!(f.apply(x), extended(&el(2, &[1, 3]), -1, x));
        }
        assert_eq!(extend_in(&ElemIN::alpha(), 1), Err(Error::InvalidExtensionPoint(1)));
    }

    #[test]
    fn compose_examples() {
        let a = extend_in(&ElemIN::alpha(), 0).unwrap();
        let b = extend_in(&ElemIN::beta(), 0).unwrap();
        assert_eq!(a.compose(&b), FiniteTailMap::identity());
        assert_eq!(a.compose(&FiniteTailMap::identity()), a);
        let f = FiniteTailMap::new((-3, 0), (3, 2), vec![]).unwrap();
        let g = FiniteTailMap::new((-3, 0), (3, 3), vec![]).unwrap();
        assert_eq!(f.compose(&g).pos().1, 5);
    }

    #[test]
    fn monotone_examples() {
        let f = FiniteTailMap::new((0, 0), (3, 0), vec![(1, 2), (2, 1)]).unwrap();
        assert!(!f.is_monotone());
        assert!(FiniteTailMap::identity().is_monotone());
        assert!(extend_in(&el(-2, &[1, 2, 4]), -2).unwrap().is_monotone());
    }

    #[test]
    fn canonical_form_is_map_equality() {
        let loose = FiniteTailMap::new((-5, 1), (5, 1), vec![(-4, -3), (-3, -2), (0, 1), (4, 5)]).unwrap();
        assert_eq!((loose.neg(), loose.pos()), ((-3, 1), (4, 1)));
        assert_eq!(loose.middle(), &[(0, 1)]);
        let full = FiniteTailMap::new((-2, 3), (2, 3), vec![(-1, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!((full.neg(), full.pos(), full.middle()), ((0, 3), (1, 3), &[][..]));
    }

    #[test]
    fn rejects_non_injective_maps() {
        assert!(FiniteTailMap::new((0, 0), (3, 0), vec![(1, 2), (2, 2)]).is_err());
        assert!(FiniteTailMap::new((0, 0), (3, 0), vec![(1, 0)]).is_err());
        assert!(FiniteTailMap::new((0, 5), (3, 0), vec![]).is_err());
        assert!(FiniteTailMap::new((3, 0), (3, 0), vec![]).is_err());
        assert!(serde_json::from_str::<FiniteTailMap>(r#"{"neg":[0,0],"pos":[3,0],"middle":[[1,2],[2,2]]}"#).is_err());
    }

    #[test]
    fn json_shape() {
        let f = extend_in(&el(2, &[1, 3]), -1).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"neg":[-1,0],"pos":[4,2],"middle":[[2,4]]}"#);
    }

    #[test]
    fn homomorphism_examples() {
        assert_eq!(hom_translation(&ElemIN::alpha()), ElemID::from_unit(IsoZ::translation(1)));
        assert_eq!(hom_translation(&el(0, &[2, 3])), ElemID::identity());
        assert_eq!(hom_z2(&ElemIN::alpha()), ElemID::from_unit(IsoZ::reflection(0)));
        assert_eq!(hom_z2(&ElemIN::alpha().compose(&ElemIN::alpha())), ElemID::identity());
        assert_eq!(hom_z2(&ElemIN::beta()), ElemID::from_unit(IsoZ::reflection(0)));
        let ab = ElemIN::alpha().compose(&ElemIN::beta());
        assert_eq!(hom_z2(&ab), hom_z2(&ElemIN::alpha()).compose(&hom_z2(&ElemIN::beta())));
        assert_eq!(hom_annihilating(&ElemIN::alpha()), ElemID::identity());
    }

    #[test]
    fn eps_conjugation_examples() {
        assert_eq!(eps_conjugation(5, 2).unwrap(), el(0, &[2]));
        assert_eq!(eps_conjugation(3, 2).unwrap(), el(0, &[2]));
        assert_eq!(eps_conjugation(10, 9).unwrap(), el(0, &[9]));
        assert_eq!(eps_conjugation(3, 3), Err(Error::InvalidIndices { k: 3, l: 3 }));
        assert_eq!(eps_conjugation(5, 1), Err(Error::InvalidIndices { k: 5, l: 1 }));
    }

    #[test]
    fn refute_examples() {
        let gens = [ElemIN::alpha(), ElemIN::beta(), ElemIN::eps(2).unwrap(), ElemIN::eps(3).unwrap()];
        let w = refute_finite_generation(&gens).unwrap();
        assert_eq!((w.element.clone(), w.bound_k, w.certificate), (el(0, &[2, 3, 4]), 3, 4));

        let w = refute_finite_generation(&[ElemIN::alpha(), ElemIN::beta()]).unwrap();
        assert_eq!((w.element.clone(), w.bound_k, w.certificate), (el(0, &[2]), 1, 2));

        let w = refute_finite_generation(&[ElemIN::eps(5).unwrap()]).unwrap();
        assert_eq!((w.element.clone(), w.bound_k, w.certificate), (el(0, &[2, 3, 4, 5, 6]), 5, 6));

        assert_eq!(refute_finite_generation(&[]), Err(Error::EmptyGenerators));
    }
}
