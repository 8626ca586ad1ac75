//! The algebra abstraction shared by every construction, and tensor products.
//!
//! An [`Algebra`] is described by its scalar field, a canonical basis and the
//! product of two basis elements. Elements are [`LinComb`]s over the basis;
//! everything else (sums, products, commutators, evaluation of free-algebra
//! polynomials) is derived from that.

use std::fmt::Debug;

use serde::Serialize;

use crate::coeff::{FieldTag, Scalar};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

/// Outcome of a zero test. Quotient algebras whose normal form is only known
/// within a bounded support may answer `Unknown`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ZeroVerdict {
    Zero,
    NonZero,
    Unknown,
}

/// Element type of an algebra.
pub type Elem<A> = LinComb<<A as Algebra>::Basis>;

/// A unital associative algebra over one of the supported fields, given by a
/// canonical basis and structure constants.
pub trait Algebra {
    type Basis: Clone + Ord + Debug + Serialize;

    fn field(&self) -> FieldTag;

    fn unit_basis(&self) -> Self::Basis;

    /// Product of two basis elements, expanded in the canonical basis.
    fn basis_mul(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    /// Whether `b` is a basis element of this algebra.
    fn contains(&self, b: &Self::Basis) -> bool;

    fn describe(&self) -> String;

    /// Whether an element with terms is certainly nonzero. False for
    /// algebras whose stored form is not a true normal form.
    fn exact_normal_form(&self) -> bool {
        true
    }

    fn zero(&self) -> Elem<Self> {
        LinComb::zero(self.field())
    }

    fn one(&self) -> Elem<Self> {
        LinComb::basis(self.field(), self.unit_basis())
    }

    fn scalar(&self, c: &Scalar) -> Elem<Self> {
        LinComb::monomial(self.field(), self.unit_basis(), c.clone())
    }

    fn basis_elem(&self, b: Self::Basis) -> Elem<Self> {
        LinComb::basis(self.field(), b)
    }

    /// Verifies that `x` is over this algebra's field and uses only its basis.
    fn check(&self, x: &Elem<Self>) -> Result<()> {
        if x.field() != self.field() {
            return Err(Error::MixedFields(self.field(), x.field()));
        }
        if let Some(b) = x.basis_elements().find(|b| !self.contains(b)) {
            return Err(Error::HandleMismatch(format!("{b:?} is not in {}", self.describe())));
        }
        Ok(())
    }

    fn add(&self, x: &Elem<Self>, y: &Elem<Self>) -> Elem<Self> {
        x.try_add(y).expect("elements of one algebra share its field")
    }

    fn sub(&self, x: &Elem<Self>, y: &Elem<Self>) -> Elem<Self> {
        x.try_sub(y).expect("elements of one algebra share its field")
    }

    fn mul(&self, x: &Elem<Self>, y: &Elem<Self>) -> Elem<Self> {
        let mut out = self.zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let prod = self.basis_mul(a, b);
                if !prod.is_zero() {
                    out.add_scaled(&prod, &(ca * cb));
                }
            }
        }
        out
    }

    fn product<'a, I>(&self, factors: I) -> Elem<Self>
    where
        I: IntoIterator<Item = &'a Elem<Self>>,
        Self::Basis: 'a,
    {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// `xy - yx`.
    fn bracket(&self, x: &Elem<Self>, y: &Elem<Self>) -> Elem<Self> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    fn zero_verdict(&self, x: &Elem<Self>) -> ZeroVerdict {
        if x.is_zero() {
            ZeroVerdict::Zero
        } else if self.exact_normal_form() {
            ZeroVerdict::NonZero
        } else {
            ZeroVerdict::Unknown
        }
    }
}

/// Basis element `g ⊗ h` of a tensor product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TensorBasis<L, R> {
    pub left: L,
    pub right: R,
}

pub type TensorElement<G, H> = LinComb<TensorBasis<<G as Algebra>::Basis, <H as Algebra>::Basis>>;

/// `G ⊗ H` over a common field, with `(g ⊗ h)(g' ⊗ h') = gg' ⊗ hh'`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra<G, H> {
    left: G,
    right: H,
}

impl<G: Algebra, H: Algebra> TensorAlgebra<G, H> {
    pub fn new(left: G, right: H) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::MixedFields(left.field(), right.field()));
        }
        Ok(TensorAlgebra { left, right })
    }

    pub fn left(&self) -> &G {
        &self.left
    }

    pub fn right(&self) -> &H {
        &self.right
    }

    /// The pure tensor `g ⊗ h`, expanded bilinearly.
    pub fn pure(&self, g: &Elem<G>, h: &Elem<H>) -> Result<TensorElement<G, H>> {
        self.left.check(g)?;
        self.right.check(h)?;
        Ok(outer(self.field(), g, h))
    }

    /// Splits an element into its left/right coefficient pairs.
    pub fn split_terms(&self, x: &TensorElement<G, H>) -> Vec<(G::Basis, H::Basis, Scalar)> {
        x.terms().map(|(b, c)| (b.left.clone(), b.right.clone(), c.clone())).collect()
    }
}

fn outer<L: Ord + Clone, R: Ord + Clone>(
    field: FieldTag,
    g: &LinComb<L>,
    h: &LinComb<R>,
) -> LinComb<TensorBasis<L, R>> {
    let mut out = LinComb::zero(field);
    for (a, ca) in g.terms() {
        for (b, cb) in h.terms() {
            out.add_term(TensorBasis { left: a.clone(), right: b.clone() }, &(ca * cb));
        }
    }
    out
}

impl<G: Algebra, H: Algebra> Algebra for TensorAlgebra<G, H> {
    type Basis = TensorBasis<G::Basis, H::Basis>;

    fn field(&self) -> FieldTag {
        self.left.field()
    }

    fn unit_basis(&self) -> Self::Basis {
        TensorBasis { left: self.left.unit_basis(), right: self.right.unit_basis() }
    }

    fn basis_mul(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis> {
        let l = self.left.basis_mul(&a.left, &b.left);
        if l.is_zero() {
            return self.zero();
        }
        let r = self.right.basis_mul(&a.right, &b.right);
        outer(self.field(), &l, &r)
    }

    fn contains(&self, b: &Self::Basis) -> bool {
        self.left.contains(&b.left) && self.right.contains(&b.right)
    }

    fn describe(&self) -> String {
        format!("({}) ⊗ ({})", self.left.describe(), self.right.describe())
    }

    fn exact_normal_form(&self) -> bool {
        self.left.exact_normal_form() && self.right.exact_normal_form()
    }
}
