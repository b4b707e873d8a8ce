use rootkit::classify::highest_roots;
use rootkit::weyl::reflect;
use rootkit::RootSystem;

fn main() -> rootkit::Result<()> {
    let s = RootSystem::build("G2".parse()?);
    let (a, b) = (s.simple(0), s.simple(1));
    println!("α = {a}, β = {b}");
    println!("(α, α) = {}, (β, β) = {}", s.inner(a, a), s.inner(b, b));

    let (h, h2) = highest_roots(&s);
    let sa_b = reflect(&s, 0, b)?;
    let sb_a = reflect(&s, 1, a)?;
    println!("α^h = {h}, α^h2 = {h2}");
    println!("s_α(β) = {sa_b}, which is not α^h: {}", sa_b != h);
    println!("s_β(α) = {sb_a}");
    Ok(())
}
