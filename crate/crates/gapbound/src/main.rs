fn main() {
    // CLI filled in by cli module below.
    todo!()
}
