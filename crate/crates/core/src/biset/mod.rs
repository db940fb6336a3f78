//! The bifree double Burnside group `B^Δ(G, H)`: twisted diagonal
//! subgroups, their conjugacy classes and marks, duality, and the tensor
//! product computed two ways (Mackey formula and mark formula).

mod diagonal;
mod element;
mod ring;
mod table;
mod tensor;

pub use diagonal::{n_alpha, normalizer_pairs, TwistedDiagonal};
pub use element::BisetElement;
pub use ring::{BisetPair, DoubleBurnsideRing};
pub use table::{TwistedClass, TwistedClassTable};
pub use tensor::{double_coset_reps, tensor_mark, triple_orbits, TensorProduct, Triple, TripleOrbits};
