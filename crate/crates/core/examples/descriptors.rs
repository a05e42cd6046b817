//! Space descriptors in JSON and shorthand form.
//!
//! cargo run --example descriptors

use koethe::{make_space, SpaceDescriptor};

fn main() -> koethe::Result<()> {
    let texts = [
        r#"{"type":"lp","p":"inf","N":3}"#,
        r#"{"type":"lorentz","p":1,"N":3,"weights":{"kind":"power","theta":0.5}}"#,
        "lorentz(w=(1,.5,.25),p=1)",
        "power(r=0.5,dual(lorentz(w=k^-0.3,p=2)))",
        "marcinkiewicz(psi=(1,1.5,1.75))",
    ];
    for text in texts {
        let d = SpaceDescriptor::parse(text, Some(3))?;
        let e = make_space(&d)?;
        println!(
            "{text}\n  -> {d}\n  -> {}\n  flags {:?}",
            d.to_json(),
            e.flags()
        );
        assert_eq!(SpaceDescriptor::from_json(&d.to_json())?, d);
    }
    for bad in [
        "lp(p=2)",
        r#"{"type":"lorentz","p":1,"N":2,"weights":{"kind":"explicit","values":[1,2]}}"#,
    ] {
        match SpaceDescriptor::parse(bad, None).and_then(|d| make_space(&d)) {
            Err(e) => println!("{bad}: {e}"),
            Ok(_) => unreachable!(),
        }
    }
    Ok(())
}
