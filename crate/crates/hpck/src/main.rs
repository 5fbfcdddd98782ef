use rfluids::prelude::*;

fn main() {
    let mut r134a = Fluid::from(Pure::R134a)
        .in_state(FluidInput::temperature(Temperature::new::<uom::si::thermodynamic_temperature::degree_celsius>(0.0)), FluidInput::quality(Ratio::new::<uom::si::ratio::ratio>(0.0)))
        .unwrap();
    println!("P_sat(0C) = {:?}", r134a.pressure());
    println!("h_f(0C) = {:?}", r134a.enthalpy());
}
