use std::fmt;

use crate::error::{usage, Result};

/// A signed permutation of `{1, …, m}`: `images[i-1] = w(i)`, and
/// `w(-i) = -w(i)`. Unsigned permutations realize type `A`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    images: Vec<i8>,
}

impl WeylElement {
    pub fn identity(m: usize) -> Self {
        WeylElement {
            images: (1..=m as i8).collect(),
        }
    }

    pub fn from_images(images: Vec<i8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > m || std::mem::replace(&mut seen[a - 1], true) {
                return Err(usage(format!("{images:?} is not a signed permutation")));
            }
        }
        Ok(WeylElement { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<i8>) -> Self {
        WeylElement { images }
    }

    pub fn images(&self) -> &[i8] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `w(i)` for a signed index `i ≠ 0`.
    pub fn apply(&self, i: i8) -> i8 {
        let x = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -x
        } else {
            x
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        WeylElement {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let v = i as i8 + 1;
            images[x.unsigned_abs() as usize - 1] = if x < 0 { -v } else { v };
        }
        WeylElement { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i8 + 1)
    }

    /// Number of negated images.
    pub fn sign_changes(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_inverse() {
        let a = WeylElement::from_images(vec![2, -1, 3]).unwrap();
        let b = WeylElement::from_images(vec![-3, 1, 2]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.images(), &[-3, 2, -1]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(b.inverse().compose(&b).is_identity());
        let c = WeylElement::from_images(vec![1, 3, -2]).unwrap();
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn validation() {
        assert!(WeylElement::from_images(vec![1, 1]).is_err());
        assert!(WeylElement::from_images(vec![1, 3]).is_err());
        assert!(WeylElement::from_images(vec![0, 1]).is_err());
        assert_eq!(WeylElement::from_images(vec![-2, -1]).unwrap().sign_changes(), 2);
    }
}
