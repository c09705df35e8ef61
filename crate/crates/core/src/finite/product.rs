use crate::monoid::{BooleanInverseMonoid, FiniteMonoid};

/// Direct product `S × T` with componentwise operations.
#[derive(Clone, Debug)]
pub struct Product<S, T> {
    pub left: S,
    pub right: T,
}

impl<S, T> Product<S, T> {
    pub fn new(left: S, right: T) -> Self {
        Self { left, right }
    }
}

impl<S: BooleanInverseMonoid, T: BooleanInverseMonoid> BooleanInverseMonoid for Product<S, T> {
    type Element = (S::Element, T::Element);

    fn multiply(&self, s: &Self::Element, t: &Self::Element) -> Self::Element {
        (
            self.left.multiply(&s.0, &t.0),
            self.right.multiply(&s.1, &t.1),
        )
    }

    fn inverse(&self, s: &Self::Element) -> Self::Element {
        (self.left.inverse(&s.0), self.right.inverse(&s.1))
    }

    fn zero(&self) -> Self::Element {
        (self.left.zero(), self.right.zero())
    }

    fn one(&self) -> Self::Element {
        (self.left.one(), self.right.one())
    }

    fn is_idempotent(&self, s: &Self::Element) -> bool {
        self.left.is_idempotent(&s.0) && self.right.is_idempotent(&s.1)
    }

    fn idempotent_complement(&self, e: &Self::Element) -> Self::Element {
        (
            self.left.idempotent_complement(&e.0),
            self.right.idempotent_complement(&e.1),
        )
    }

    fn raw_meet(&self, s: &Self::Element, t: &Self::Element) -> Self::Element {
        (
            self.left.raw_meet(&s.0, &t.0),
            self.right.raw_meet(&s.1, &t.1),
        )
    }

    fn raw_join(&self, s: &Self::Element, t: &Self::Element) -> Self::Element {
        (
            self.left.raw_join(&s.0, &t.0),
            self.right.raw_join(&s.1, &t.1),
        )
    }

    fn render(&self, s: &Self::Element) -> String {
        format!("({}, {})", self.left.render(&s.0), self.right.render(&s.1))
    }
}

impl<S: FiniteMonoid, T: FiniteMonoid> FiniteMonoid for Product<S, T> {
    fn elements(&self) -> Vec<Self::Element> {
        let right = self.right.elements();
        let mut out: Vec<_> = self
            .left
            .elements()
            .into_iter()
            .flat_map(|a| right.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        out.sort();
        out
    }

    fn name(&self) -> String {
        format!("{}x{}", self.left.name(), self.right.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::SymmetricInverseMonoid;

    #[test]
    fn carrier_is_cartesian() {
        let i1 = SymmetricInverseMonoid::new(1).unwrap();
        let i2 = SymmetricInverseMonoid::new(2).unwrap();
        assert_eq!(Product::new(i1.clone(), i1).elements().len(), 4);
        assert_eq!(Product::new(i2.clone(), i2).elements().len(), 49);
    }
}
