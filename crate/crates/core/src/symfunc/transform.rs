//! Linear alphabet transforms acting on power sums.
//!
//! A scale transform sends `p_k` to `c_k p_k` (so `X -> X A` multiplies by
//! `A(q^k, t^k)`); an evaluate transform sends `p_k` to a scalar, specializing
//! `X` to a finite alphabet.

use super::{Basis, SymFunc};
use crate::qfield::CoefQT;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    Scale,
    Evaluate,
}

type PkImage = Arc<dyn Fn(usize) -> CoefQT + Send + Sync>;

#[derive(Clone)]
pub struct AlphabetTransform {
    kind: TransformKind,
    pk_image: PkImage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransformOutput {
    Func(SymFunc),
    Scalar(CoefQT),
}

impl TransformOutput {
    pub fn into_func(self) -> Option<SymFunc> {
        match self {
            TransformOutput::Func(f) => Some(f),
            TransformOutput::Scalar(_) => None,
        }
    }

    pub fn into_scalar(self) -> Option<CoefQT> {
        match self {
            TransformOutput::Scalar(c) => Some(c),
            TransformOutput::Func(_) => None,
        }
    }
}

impl AlphabetTransform {
    pub fn new(kind: TransformKind, pk_image: impl Fn(usize) -> CoefQT + Send + Sync + 'static) -> Self {
        AlphabetTransform {
            kind,
            pk_image: Arc::new(pk_image),
        }
    }

    /// `X -> X * a`: `p_k` scales by `a(q^k, t^k)`.
    pub fn scale_by(a: CoefQT) -> Self {
        Self::new(TransformKind::Scale, move |k| a.frobenius(k))
    }

    /// `X -> a` for an alphabet written as a sum of monomials (or a quotient
    /// of such): `p_k` maps to `a(q^k, t^k)`.
    pub fn evaluate_at(a: CoefQT) -> Self {
        Self::new(TransformKind::Evaluate, move |k| a.frobenius(k))
    }

    /// `X -> X (1 - q)`.
    pub fn times_one_minus_q() -> Self {
        Self::scale_by(CoefQT::one_minus_q_pow(1))
    }

    /// `X -> X / (1 - q)`.
    pub fn over_one_minus_q() -> Self {
        Self::scale_by(CoefQT::one_minus_q_pow(1).inv().expect("1-q is nonzero"))
    }

    pub fn identity() -> Self {
        Self::new(TransformKind::Scale, |_| CoefQT::one())
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn pk_image(&self, k: usize) -> CoefQT {
        (self.pk_image)(k)
    }

    /// Apply `self` then `other`; both must be scale transforms.
    pub fn then(&self, other: &AlphabetTransform) -> Option<AlphabetTransform> {
        if self.kind != TransformKind::Scale {
            return None;
        }
        let (a, b) = (self.pk_image.clone(), other.pk_image.clone());
        Some(Self::new(other.kind, move |k| a(k) * b(k)))
    }

    pub(super) fn apply(&self, f: &SymFunc) -> TransformOutput {
        let n = f.degree();
        let images: Vec<CoefQT> = (1..=n.max(1)).map(|k| self.pk_image(k)).collect();
        let factor = |rho: &crate::Partition| -> CoefQT { rho.parts().iter().map(|&k| images[k - 1].clone()).product() };
        let p = f.basis_convert(Basis::Power);
        match self.kind {
            TransformKind::Scale => {
                let terms: Vec<_> = p.into_iter().map(|(rho, c)| {
                    let x = factor(&rho);
                    (rho, c * x)
                }).collect();
                TransformOutput::Func(SymFunc::from_expansion(Basis::Power, n, terms))
            }
            TransformKind::Evaluate => TransformOutput::Scalar(p.into_iter().map(|(rho, c)| c * factor(&rho)).sum()),
        }
    }
}

impl fmt::Debug for AlphabetTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlphabetTransform({:?}, p1 -> {})", self.kind, self.pk_image(1))
    }
}

impl SymFunc {
    /// `f[X A]` for a scale transform; panics on an evaluate transform.
    pub fn plethysm_scale(&self, tr: &AlphabetTransform) -> SymFunc {
        assert_eq!(tr.kind, TransformKind::Scale, "expected a scale transform");
        tr.apply(self).into_func().expect("scale output")
    }

    /// `f[a]` for an evaluate transform; panics on a scale transform.
    pub fn evaluate(&self, tr: &AlphabetTransform) -> CoefQT {
        assert_eq!(tr.kind, TransformKind::Evaluate, "expected an evaluate transform");
        tr.apply(self).into_scalar().expect("scalar output")
    }
}
