//! Module-comodules, their compatibility conditions, bimodule coalgebras,
//! and the groupoid description of module-comodules over group algebras.

mod bimodule;
mod conditions;
mod groupoid;
mod modcomod;

pub use bimodule::{check_equivariant, BimoduleCoalgebra};
pub use conditions::{
    check_action_comodule_map, check_ayd, check_stable, check_yd, coadjoint_comodule, coadjoint_comodule_yd,
    one_dim_modcomod, oslash_action, oslash_action_with, regular_modcomod, stability_check, trivial_modcomod,
    ActionComoduleMap, Bimodule, Twist,
};
pub use groupoid::{groupoid_decompose, reassemble, FunctorData, GroupoidDecomposition};
pub use modcomod::ModComod;
