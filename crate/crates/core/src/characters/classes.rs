use std::collections::VecDeque;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::root_data::{WeylElement, WeylGroup};

/// Partition of the element list into conjugacy classes. Classes are
/// ordered by their representative, which is the member appearing first
/// in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    members: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Element index of the representative of class `c`.
    pub fn rep(&self, c: usize) -> usize {
        self.members[c][0]
    }

    pub fn reps(&self) -> Vec<usize> {
        self.members.iter().map(|m| m[0]).collect()
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// Element indices of class `c`, sorted.
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn group_order(&self) -> usize {
        self.class_of.len()
    }

    /// First, middle and last members: the deterministic sample on which
    /// class functions are checked for constancy.
    fn samples(&self, c: usize) -> [usize; 3] {
        let m = &self.members[c];
        [m[0], m[m.len() / 2], m[m.len() - 1]]
    }
}

/// Orbits of the conjugation action, found by closing each unassigned
/// element under conjugation by the simple reflections.
pub fn conjugacy_classes(weyl: &WeylGroup) -> ConjugacyClasses {
    let order = weyl.order();
    let gens: Vec<usize> = weyl
        .generators()
        .iter()
        .map(|g| weyl.index_of(g).expect("generator"))
        .collect();
    const UNSET: usize = usize::MAX;
    let mut class_of = vec![UNSET; order];
    let mut members = Vec::new();
    for start in 0..order {
        if class_of[start] != UNSET {
            continue;
        }
        let c = members.len();
        class_of[start] = c;
        let mut class = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                // Simple reflections are involutions, so g x g is a conjugate.
                let y = weyl.multiply(weyl.multiply(g, x), g);
                if class_of[y] == UNSET {
                    class_of[y] = c;
                    class.push(y);
                    queue.push_back(y);
                }
            }
        }
        class.sort_unstable();
        members.push(class);
    }
    ConjugacyClasses { members, class_of }
}

/// A rational-valued function on `W` that is constant on classes, stored
/// by its value on each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub class_reps: Vec<WeylElement>,
    pub class_sizes: Vec<usize>,
    pub values: Vec<Rational>,
}

impl ClassFunction {
    /// Evaluates `f` on each class, checking that it agrees on three
    /// sample members of every class.
    pub fn from_fn<F>(weyl: &WeylGroup, classes: &ConjugacyClasses, f: F) -> Result<ClassFunction>
    where
        F: Fn(&WeylElement) -> Rational,
    {
        let mut values = Vec::with_capacity(classes.len());
        for c in 0..classes.len() {
            let v = f(weyl.element(classes.rep(c)));
            for s in classes.samples(c) {
                let other = f(weyl.element(s));
                if other != v {
                    return Err(Error::NotClassFunction(format!(
                        "class {c} takes values {v} and {other}"
                    )));
                }
            }
            values.push(v);
        }
        Ok(ClassFunction::from_values(weyl, classes, values))
    }

    pub fn from_values(weyl: &WeylGroup, classes: &ConjugacyClasses, values: Vec<Rational>) -> ClassFunction {
        assert_eq!(values.len(), classes.len());
        ClassFunction {
            class_reps: classes.reps().iter().map(|&i| weyl.element(i).clone()).collect(),
            class_sizes: classes.sizes(),
            values,
        }
    }

    pub fn trivial(weyl: &WeylGroup, classes: &ConjugacyClasses) -> ClassFunction {
        ClassFunction::from_values(weyl, classes, vec![rat(1); classes.len()])
    }

    /// The sign character `w -> (-1)^{l(w)}`.
    pub fn sign(weyl: &WeylGroup, classes: &ConjugacyClasses) -> ClassFunction {
        let values = classes
            .reps()
            .iter()
            .map(|&i| rat(weyl.element(i).sign() as i64))
            .collect();
        ClassFunction::from_values(weyl, classes, values)
    }

    pub fn group_order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    /// Value at the identity, which is always the first class.
    pub fn degree(&self) -> &Rational {
        &self.values[0]
    }

    /// `<a, b> = |W|^{-1} sum_w a(w) b(w)`. Characters of Weyl groups are
    /// real, so no conjugation is needed.
    pub fn inner_product(&self, other: &ClassFunction) -> Rational {
        assert_eq!(self.class_sizes, other.class_sizes, "different class structures");
        let sum = self
            .values
            .iter()
            .zip(&other.values)
            .zip(&self.class_sizes)
            .fold(Rational::zero(), |acc, ((a, b), &n)| acc + a * b * rat(n as i64));
        sum / rat(self.group_order() as i64)
    }

    /// Pointwise product (character of the tensor product).
    pub fn tensor(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.class_sizes, other.class_sizes, "different class structures");
        ClassFunction {
            class_reps: self.class_reps.clone(),
            class_sizes: self.class_sizes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    /// Multiplicity of the trivial character.
    pub fn invariants(&self) -> Rational {
        self.values
            .iter()
            .zip(&self.class_sizes)
            .fold(Rational::zero(), |acc, (a, &n)| acc + a * rat(n as i64))
            / rat(self.group_order() as i64)
    }
}
