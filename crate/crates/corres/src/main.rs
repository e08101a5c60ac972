fn main() {
    println!("corres CLI: under construction");
}
