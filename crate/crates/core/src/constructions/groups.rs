use crate::error::{Error, Result};
use crate::exactlin::{vector, Field, Matrix, Tensor3};
use crate::hopfcore::{AlgebraSC, CoalgebraSC, HopfSC};
use crate::MAX_DIM;

/// A finite group given by its Cayley table (`table[a][b]` is the index of `ab`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = labels.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::Invalid(format!("group order {n} out of range")));
        }
        if table.len() != n
            || table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::Invalid(
                "Cayley table is not an n×n table over the labels".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid(format!(
                            "Cayley table is not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Invalid("Cayley table has no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(Error::Invalid(format!("{} has no inverse", labels[a])));
            }
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
        })
    }

    /// `C_n` on `e, g, g^2, …`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::new(labels, table).expect("cyclic group table is valid")
    }

    /// `S_3` as permutations of `{0,1,2}`, identity first.
    pub fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let labels = ["e", "(01)", "(12)", "(02)", "(012)", "(021)"];
        // (στ)(i) = σ(τ(i))
        let compose = |s: &[usize; 3], t: &[usize; 3]| [s[t[0]], s[t[1]], s[t[2]]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(compose(s, t))).collect())
            .collect();
        FiniteGroup::new(labels.iter().map(|s| s.to_string()).collect(), table)
            .expect("S3 table is valid")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("validated group")
    }
}

/// The group algebra `kG` on the group elements.
pub fn group_algebra(field: Field, g: &FiniteGroup) -> AlgebraSC {
    let n = g.order();
    AlgebraSC::from_products(
        field,
        g.labels().to_vec(),
        vector::unit(field, n, g.identity()),
        |a, b| vector::unit(field, n, g.mul(a, b)),
    )
    .expect("group algebra shapes")
}

/// `kG` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g^{-1}`.
pub fn group_hopf(field: Field, g: &FiniteGroup) -> HopfSC {
    let n = g.order();
    let alg = group_algebra(field, g);
    let mut comult = Tensor3::zeros(field, (n, n, n));
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        comult[(a, a, a)] = field.one();
        antipode[(g.inverse(a), a)] = field.one();
    }
    let coalg = CoalgebraSC::new(comult, vec![field.one(); n]).expect("shapes");
    HopfSC::new(alg, coalg, antipode).expect("shapes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_validation() {
        assert!(
            FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 1]]).is_err()
        );
        assert!(FiniteGroup::new(vec!["a".into()], vec![vec![1]]).is_err());
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        // (01)(12) = (012) under right-to-left composition
        assert_eq!(s3.labels()[s3.mul(1, 2)], "(012)");
        assert_eq!(s3.inverse(4), 5);
    }

    #[test]
    fn group_hopf_c3_is_valid_and_involutory() {
        let h = group_hopf(Field::Rational, &FiniteGroup::cyclic(3));
        assert!(h.validate().is_ok());
        assert!(h.is_involutory());
        assert_eq!(h.labels(), ["e", "g", "g^2"]);
    }
}
