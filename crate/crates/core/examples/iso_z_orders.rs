//! Isometries of Z: composition, inverses and element orders.

use isomon::IsoZ;

fn main() {
    let samples =
        [IsoZ::IDENTITY, IsoZ::translation(3), IsoZ::translation(-2), IsoZ::reflection(0), IsoZ::reflection(5)];
    for g in samples {
        println!("{g:?}: 4 ↦ {}, inverse {:?}, order {}", g.apply(4), g.inverse(), g.order());
    }
    // two reflections compose to a translation
    let r = IsoZ::reflection(5).compose(IsoZ::reflection(2));
    println!("reflect about 5/2 then about 1: {r:?}, order {}", r.order());
}
