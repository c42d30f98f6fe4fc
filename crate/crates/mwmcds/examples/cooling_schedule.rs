//! Show the temperature schedule under both cooling readings.
//!
//! Run with: cargo run --example cooling_schedule

use mwmcds::annealer::TemperatureSchedule;

fn main() {
    println!("literal reading (multiply by 1 - gamma = 0.1):");
    let mut sched = TemperatureSchedule::new(100.0, 3, 0.1);
    for i in 1..=12 {
        println!("  iteration {i:2}: T = {}", sched.current());
        sched.step();
    }

    println!("gamma reading (multiply by gamma = 0.9), every 3rd level:");
    let mut sched = TemperatureSchedule::new(100.0, 3, 0.9);
    for i in 1..=45 {
        if i % 9 == 1 {
            println!("  iteration {i:2}: T = {:.3}", sched.current());
        }
        sched.step();
    }
}
