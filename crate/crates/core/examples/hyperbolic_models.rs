//! Converts one point between the three models and measures a few distances.

use hudg::hypgeo::{convert, hyp_distance, minkowski_b, HPoint, Model, ModelPoint, PolarPoint};

fn main() -> hudg::Result<()> {
    let p = PolarPoint::new(2.0, 60f64.to_radians())?;
    let h = convert(ModelPoint::Polar(p), Model::Hyperboloid)?;
    let k = convert(h, Model::Klein)?;
    println!("polar       {:?}", p);
    println!("hyperboloid {:?}", h.to_hyperboloid().coords());
    println!("klein       {:?}", k);

    let q = PolarPoint::new(2.0, 0.0)?.to_hyperboloid();
    let h = h.to_hyperboloid();
    println!("B(p, q)           = {}", minkowski_b(&h, &q));
    println!("d(p, q)           = {}", hyp_distance(&h, &q)?);
    println!("d(origin, p)      = {}", hyp_distance(&HPoint::ORIGIN, &h)?);

    // Points at radius r on rays 60° apart: the Euclidean distance would be r,
    // the hyperbolic one tends to 2r − 2 ln 2.
    for r in [0.1, 1.0, 3.0, 6.0] {
        let a = PolarPoint::new(r, 0.0)?.to_hyperboloid();
        let b = PolarPoint::new(r, 60f64.to_radians())?.to_hyperboloid();
        println!("r = {r:>3}: d = {:.6}", hyp_distance(&a, &b)?);
    }
    Ok(())
}
