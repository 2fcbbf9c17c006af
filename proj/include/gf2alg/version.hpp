#ifndef GF2ALG_VERSION_HPP
#define GF2ALG_VERSION_HPP

namespace gf2alg {

inline constexpr const char* kVersion = "1.0.0";
// Bumped when basis files stop being byte-compatible; part of cache names.
inline constexpr int kCacheFormatVersion = 1;

}  // namespace gf2alg

#endif
