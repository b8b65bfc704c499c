/*! \file generate.hpp
 *  \brief Seeded random generation of braid-closure long knots.
 *
 * Letters are drawn uniformly over the generators and their inverses on 2..5
 * strands; words whose closure is not a single component are rejected and
 * redrawn.  The generator is a fixed splitmix64 so equal seeds give identical
 * diagrams on every platform.
 */

#pragma once

#include "longknot/braid.hpp"
#include "longknot/diagram.hpp"

#include <cstdint>
#include <stdexcept>

namespace longknot {

class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /*! \brief Uniform value in [0, bound). */
  std::uint64_t below(std::uint64_t bound) {
    // Rejection keeps the draw unbiased and platform-independent.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::uint64_t state_;
};

struct gen_options {
  int max_crossings = 12;
  int min_strands = 2;
  int max_strands = 5;
  int max_attempts_per_diagram = 1000;
};

/*! \brief Draw one braid word; the closure may or may not be a knot. */
inline braid_word random_braid(splitmix64& rng, const gen_options& opt) {
  if (opt.max_crossings < 1 || opt.min_strands < 2 || opt.max_strands < opt.min_strands)
    throw std::invalid_argument("random_braid: bad generation bounds");
  braid_word word;
  word.strand_count = rng.range(opt.min_strands, opt.max_strands);
  const int length = rng.range(1, opt.max_crossings);
  word.letters.reserve(length);
  for (int i = 0; i < length; ++i) {
    const int generator = rng.range(1, word.strand_count - 1);
    word.letters.push_back(rng.range(0, 1) ? generator : -generator);
  }
  return word;
}

class generation_exhausted : public std::runtime_error {
 public:
  generation_exhausted(int produced, int requested)
      : std::runtime_error("generation budget exhausted after producing " + std::to_string(produced) + " of " +
                           std::to_string(requested) + " diagrams"),
        produced_(produced) {}

  int produced() const { return produced_; }

 private:
  int produced_;
};

/*! \brief Rejection-sample one single-component braid closure. */
inline closed_diagram random_closed_diagram(splitmix64& rng, const gen_options& opt) {
  for (int attempt = 0; attempt < opt.max_attempts_per_diagram; ++attempt) {
    try {
      return from_braid(random_braid(rng, opt));
    } catch (const validation_error&) {
      // multi-component closure; redraw
    }
  }
  throw generation_exhausted(0, 1);
}

/*! \brief Random long knot: a sampled closure cut at a random basepoint edge. */
inline long_knot_diagram random_long_knot(splitmix64& rng, const gen_options& opt) {
  closed_diagram d = random_closed_diagram(rng, opt);
  const int basepoint = d.edge_count == 0 ? 0 : rng.range(0, d.edge_count - 1);
  return make_long(std::move(d), basepoint);
}

}  // namespace longknot
