//! H(6,4) has no hyperovals: the counting equations have no admissible
//! solution.

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cert = geomforge::hyperovals::h6_counting_check()?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    Ok(())
}
