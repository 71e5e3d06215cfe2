//! Exact dense linear algebra over the rationals and prime fields.

mod matrix;
mod reduce;
mod scalar;

pub use matrix::ExactMatrix;
pub use reduce::{RowReducer, SparseRow};
pub use scalar::{Field, Scalar};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn ints(v: &[Scalar]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(ExactMatrix::identity(Q, 2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let a = ExactMatrix::from_ints(Q, 1, 2, &[1, 1]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(ints(&k[0]), ["-1", "1"]);
        assert!(a.mul_vec(&k[0]).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn empty_constraints_give_standard_basis() {
        let a = ExactMatrix::zeros(Q, 0, 3);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
                assert_eq!(x.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn solve_examples() {
        let i2 = ExactMatrix::identity(Q, 2);
        let b = [Scalar::from_i64(Q, 3), Scalar::from_i64(Q, 4)];
        assert_eq!(i2.solve(&b).unwrap().unwrap(), b.to_vec());

        let row = ExactMatrix::from_ints(Q, 1, 2, &[1, 1]);
        let x = row.solve(&[Q.one()]).unwrap().unwrap();
        assert_eq!(ints(&x), ["1", "0"]);

        let col = ExactMatrix::from_ints(Q, 2, 1, &[1, 1]);
        let b = [Q.one(), Scalar::from_i64(Q, 2)];
        assert_eq!(col.solve(&b).unwrap(), None);
    }

    #[test]
    fn solve_rejects_mixed_fields() {
        let a = ExactMatrix::identity(Q, 1);
        assert!(matches!(
            a.solve(&[Field::Prime(2).one()]),
            Err(crate::Error::FieldMismatch(..))
        ));
        let b = ExactMatrix::identity(Field::Prime(2), 1);
        assert!(a.mul(&b).is_err());
        assert!(ExactMatrix::new(Q, 1, 1, vec![Field::Prime(3).one()]).is_err());
    }

    #[test]
    fn invertibility() {
        assert!(ExactMatrix::identity(Q, 3).is_invertible());
        assert!(!ExactMatrix::zeros(Q, 2, 3).is_invertible());
        assert!(!ExactMatrix::from_ints(Q, 2, 2, &[1, 1, 1, 1]).is_invertible());
        assert!(ExactMatrix::zeros(Q, 0, 0).is_invertible());
        let a = ExactMatrix::from_ints(Q, 2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(Q, 2));
    }

    #[test]
    fn rational_elimination_stays_exact() {
        let a = ExactMatrix::from_ints(Q, 2, 3, &[2, 3, 5, 7, 11, 13]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).unwrap().iter().all(Scalar::is_zero));
    }

    fn f2_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (0usize..=4, 0usize..=4)
            .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0i64..2, r * c)))
    }

    proptest! {
        #[test]
        fn f2_kernel_size_matches_enumeration((r, c, vals) in f2_matrix()) {
            let f2 = Field::Prime(2);
            let a = ExactMatrix::from_ints(f2, r, c, &vals);
            let mut count = 0u32;
            for mask in 0u32..(1 << c) {
                let x: Vec<Scalar> = (0..c)
                    .map(|j| Scalar::from_i64(f2, ((mask >> j) & 1) as i64))
                    .collect();
                if a.mul_vec(&x).unwrap().iter().all(Scalar::is_zero) {
                    count += 1;
                }
            }
            prop_assert_eq!(count, 1u32 << a.kernel_basis().len());
        }

        #[test]
        fn solutions_reproduce_rhs(
            vals in proptest::collection::vec(-3i64..=3, 12),
            rhs in proptest::collection::vec(-3i64..=3, 3),
        ) {
            let a = ExactMatrix::from_ints(Q, 3, 4, &vals);
            let b: Vec<Scalar> = rhs.iter().map(|&v| Scalar::from_i64(Q, v)).collect();
            if let Some(x) = a.solve(&b).unwrap() {
                prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
            }
        }

        #[test]
        fn kernel_is_deterministic(vals in proptest::collection::vec(-2i64..=2, 12)) {
            let a = ExactMatrix::from_ints(Q, 3, 4, &vals);
            prop_assert_eq!(a.kernel_basis(), a.clone().kernel_basis());
            prop_assert_eq!(a.kernel_basis().len() + a.rank(), 4);
        }
    }
}
