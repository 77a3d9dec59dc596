//! Store generated polynomials in the on-disk cache and read them back.

use umemura::cli::cache::{Cache, CacheKey};
use umemura::recurrences::{FamilyTag, MuMode, PolySequence};

fn main() -> umemura::Result<()> {
    let dir = std::env::temp_dir().join("umemura-example-cache");
    let cache = Cache::new(&dir);
    let mu = MuMode::Value(umemura::exactpoly::rat(1, 2));
    let s = PolySequence::umemura(mu.clone(), 4)?;
    for (n, p) in s.members() {
        let key = CacheKey::new(FamilyTag::UmemuraS, n, &mu);
        let outcome = cache.store(key.clone(), p.clone())?;
        let back = cache.load(&key)?.expect("just stored");
        println!("{:<24} {outcome:?}, checksum {}", key.file_name(), &back.checksum[..12]);
    }
    println!("cache directory: {}", dir.display());
    Ok(())
}
