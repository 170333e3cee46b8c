mod common;

use engel_core::lie::{family, FAMILY_IDS};
use engel_core::superalg::ComplexKind;

#[test]
fn grade_additivity_and_super_antisymmetry() {
    for id in FAMILY_IDS {
        for l in common::specializations(id) {
            for kind in ComplexKind::ALL {
                common::grade_and_antisymmetry(&l, kind).unwrap_or_else(|e| panic!("family {id}: {e}"));
            }
        }
    }
}

#[test]
fn super_jacobi_on_basis_triples() {
    for id in FAMILY_IDS {
        for l in common::specializations(id) {
            for kind in ComplexKind::ALL {
                common::super_jacobi(&l, kind).unwrap_or_else(|e| panic!("family {id}: {e}"));
            }
        }
    }
}

#[test]
fn d_squared_and_lie_derivative_identities() {
    for id in FAMILY_IDS {
        common::differential_identities(&family(id).unwrap()).unwrap_or_else(|e| panic!("family {id}: {e}"));
    }
}
