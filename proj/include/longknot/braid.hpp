/*! \file braid.hpp
 *  \brief Braid words and their trace closures.
 *
 * Text format: `strands N` followed by letter tokens `sK`, `sK^-1` (or the
 * shorthand `-K` / `K`), separated by whitespace or `;`, with `#` comments.
 * Generator K crosses the strands at positions K and K+1; a positive letter
 * takes the left strand over the right one.
 */

#pragma once

#include "longknot/diagram.hpp"
#include "longknot/pd.hpp"

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace longknot {

struct braid_word {
  int strand_count = 1;
  std::vector<int> letters;  // signed generator indices, |letter| in 1..strand_count-1
};

/*! \brief Trace closure of a braid word as a closed diagram.
 *
 * Throws validation_error when the closure has more than one component, i.e.
 * when the braid permutation is not a single cycle.
 */
inline closed_diagram from_braid(const braid_word& word) {
  const int k = word.strand_count;
  if (k < 1) throw validation_error("braid needs at least one strand");
  for (int letter : word.letters) {
    const int g = letter < 0 ? -letter : letter;
    if (g < 1 || g >= k)
      throw validation_error("generator " + std::to_string(letter) + " outside 1.." + std::to_string(k - 1));
  }

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : word.letters) {
    const int i = (letter < 0 ? -letter : letter) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  int cycles = 0;
  std::vector<char> seen(k, 0);
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int p = s; !seen[p]; p = perm[p]) seen[p] = 1;
  }
  if (cycles != 1)
    throw validation_error("closure has " + std::to_string(cycles) + " components");

  if (word.letters.empty()) return {};  // one strand closing to the unknot

  std::vector<long long> current(k);
  std::iota(current.begin(), current.end(), 0LL);
  long long next_id = k;
  std::vector<std::array<long long, 4>> quads;
  quads.reserve(word.letters.size());
  for (int letter : word.letters) {
    const int i = (letter < 0 ? -letter : letter) - 1;
    const long long in_left = current[i], in_right = current[i + 1];
    const long long out_left = next_id++, out_right = next_id++;
    if (letter > 0)
      quads.push_back({in_right, out_right, out_left, in_left});
    else
      quads.push_back({in_left, in_right, out_right, out_left});
    current[i] = out_left;
    current[i + 1] = out_right;
  }
  // Close up: the edge leaving the top of position p is the edge entering the
  // bottom of position p.
  for (auto& quad : quads)
    for (auto& label : quad)
      for (int p = 0; p < k; ++p)
        if (label == current[p] && current[p] >= k) label = p;

  return canonicalize(quads);
}

/*! \brief Parse the braid text format. */
inline braid_word parse_braid(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    cleaned.push_back(comment || c == ';' ? ' ' : c);
  }

  std::istringstream in(cleaned);
  std::string token;
  if (!(in >> token) || token != "strands")
    throw parse_error("braid input must start with 'strands N'", 1, 1);
  braid_word word;
  if (!(in >> word.strand_count) || word.strand_count < 1)
    throw parse_error("invalid strand count", 1, 1);

  while (in >> token) {
    bool negative = false;
    std::string_view body = token;
    if (body.starts_with("s")) body.remove_prefix(1);
    if (body.ends_with("^-1")) {
      negative = true;
      body.remove_suffix(3);
    }
    if (body.starts_with("-")) {
      negative = !negative;
      body.remove_prefix(1);
    }
    int index = 0;
    if (body.empty()) throw parse_error("invalid braid letter '" + token + "'", 1, 1);
    for (char c : body) {
      if (c < '0' || c > '9') throw parse_error("invalid braid letter '" + token + "'", 1, 1);
      index = index * 10 + (c - '0');
    }
    if (index < 1 || index >= word.strand_count)
      throw parse_error("generator '" + token + "' outside 1.." + std::to_string(word.strand_count - 1), 1, 1);
    word.letters.push_back(negative ? -index : index);
  }
  return word;
}

/*! \brief Serialize a braid word in the text format. */
inline std::string render_braid(const braid_word& word) {
  std::ostringstream out;
  out << "strands " << word.strand_count;
  for (int letter : word.letters) {
    out << (letter < 0 ? " s" + std::to_string(-letter) + "^-1" : " s" + std::to_string(letter));
  }
  return out.str();
}

}  // namespace longknot
