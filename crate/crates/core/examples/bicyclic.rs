//! The bicyclic monoid inside IN∞: normal forms and their products.

use isomon::{BicyclicNF, ElemIN};

fn main() {
    let (alpha, beta) = (ElemIN::alpha(), ElemIN::beta());
    println!("α = {alpha}, β = {beta}");
    println!("αβ = {}", alpha.compose(&beta));
    println!("βα = {}", beta.compose(&alpha));

    let p = BicyclicNF::new(2, 1);
    let q = BicyclicNF::new(1, 3);
    let (gp, gq) = (ElemIN::from_bicyclic(p), ElemIN::from_bicyclic(q));
    println!("{p:?} is {gp}; {q:?} is {gq}");
    println!("normal-form product {:?}", p * q);
    println!("composed maps       {}", gp.compose(&gq));

    let outside = ElemIN::eps(2).unwrap();
    println!("{outside} in the bicyclic submonoid: {}", outside.is_in_cn());
}
