#include "inflation/coloring.hpp"

#include "inflation/error.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace inflation {

Coloring::Coloring(std::size_t k, std::vector<Color> assignment)
    : k_(k), assignment_(std::move(assignment)), masks_(k, assignment_.size()) {
  if (k_ == 0) fail(ErrorCode::precondition, "a coloring needs at least one part");
  for (std::size_t e = 0; e < assignment_.size(); ++e) {
    if (assignment_[e] >= k_) {
      fail(ErrorCode::precondition, "element " + std::to_string(e) + " has part id " +
                                        std::to_string(assignment_[e]) + " >= k");
    }
    masks_.set(assignment_[e], e);
  }
}

std::vector<std::size_t> Coloring::part_sizes() const {
  std::vector<std::size_t> sizes(k_, 0);
  for (Color c : assignment_) ++sizes[c];
  return sizes;
}

bool Coloring::is_balanced() const {
  if (k_ == 0 || assignment_.size() % k_ != 0) return false;
  const std::size_t part = assignment_.size() / k_;
  for (std::size_t s : part_sizes()) {
    if (s != part) return false;
  }
  return true;
}

std::string Coloring::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(k_);
  for (Color c : assignment_) mix(c);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void check_balanced(const Coloring& c, const SetSystem& sys, std::size_t k) {
  if (c.parts() != k) fail(ErrorCode::precondition, "coloring has the wrong number of parts");
  if (c.size() != sys.ground().size) {
    fail(ErrorCode::precondition, "coloring covers " + std::to_string(c.size()) +
                                      " elements but the ground set has " +
                                      std::to_string(sys.ground().size));
  }
  if (!c.is_balanced()) fail(ErrorCode::precondition, "coloring is not balanced");
}

namespace {

std::vector<Color> sorted_balanced(std::size_t x_size, std::size_t k) {
  if (k == 0 || x_size % k != 0) {
    fail(ErrorCode::infeasible, "k=" + std::to_string(k) + " does not divide |X|=" +
                                    std::to_string(x_size));
  }
  std::vector<Color> a(x_size);
  for (std::size_t e = 0; e < x_size; ++e) a[e] = static_cast<Color>(e / (x_size / k));
  return a;
}

BigInt arrangements(const std::vector<std::size_t>& counts) {
  std::uint64_t total = 0;
  BigInt out = 1;
  for (std::size_t c : counts) {
    total += c;
    out *= binomial(total, c);
  }
  return out;
}

}  // namespace

Coloring sample_balanced(const GroundSet& ground, std::size_t k, Rng& rng) {
  std::vector<Color> a = sorted_balanced(ground.size, k);
  shuffle(std::span<Color>(a), rng);
  return Coloring(k, std::move(a));
}

Coloring sample_balanced(const GroundSet& ground, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return sample_balanced(ground, k, rng);
}

BigInt count_balanced(std::size_t x_size, std::size_t k) {
  if (k == 0 || x_size % k != 0) {
    fail(ErrorCode::infeasible, "k=" + std::to_string(k) + " does not divide |X|=" +
                                    std::to_string(x_size));
  }
  return balanced_multinomial(x_size, k);
}

std::uint64_t checked_balanced_count(std::size_t x_size, std::size_t k, std::uint64_t budget) {
  const BigInt total = count_balanced(x_size, k);
  if (total > budget) {
    fail(ErrorCode::budget_exceeded, total.str() + " balanced colorings exceed the budget of " +
                                         std::to_string(budget));
  }
  return total.convert_to<std::uint64_t>();
}

std::vector<Color> unrank_balanced(std::size_t x_size, std::size_t k, std::uint64_t rank) {
  (void)sorted_balanced(x_size, k);
  std::vector<std::size_t> counts(k, x_size / k);
  BigInt remaining_rank = rank;
  if (remaining_rank >= arrangements(counts)) {
    fail(ErrorCode::precondition, "coloring rank out of range");
  }
  std::vector<Color> a;
  a.reserve(x_size);
  for (std::size_t pos = 0; pos < x_size; ++pos) {
    for (std::size_t v = 0; v < k; ++v) {
      if (counts[v] == 0) continue;
      --counts[v];
      const BigInt block = arrangements(counts);
      if (remaining_rank < block) {
        a.push_back(static_cast<Color>(v));
        break;
      }
      remaining_rank -= block;
      ++counts[v];
    }
  }
  return a;
}

std::vector<Coloring> enumerate_balanced(const GroundSet& ground, std::size_t k,
                                         std::uint64_t budget) {
  std::vector<Coloring> out;
  for_each_balanced(ground.size, k, budget,
                    [&](std::uint64_t, Coloring c) { out.push_back(std::move(c)); });
  return out;
}

Coloring parse_coloring(std::string_view text, std::size_t k) {
  std::vector<Color> a;
  std::size_t i = 0;
  std::size_t lines = 0;
  bool in_line = false;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '\n') {
      in_line = false;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (!in_line) {
      in_line = true;
      if (++lines > 1) fail(ErrorCode::parse, "coloring must be a single line");
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
           text[j] != '#') {
      ++j;
    }
    Color v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
    if (ec != std::errc() || ptr != text.data() + j) {
      fail(ErrorCode::parse, "bad part id '" + std::string(text.substr(i, j - i)) + "'");
    }
    if (v >= k) fail(ErrorCode::parse, "part id " + std::to_string(v) + " is not below k");
    a.push_back(v);
    i = j;
  }
  return Coloring(k, std::move(a));
}

std::string serialize(const Coloring& c) {
  std::ostringstream os;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (e) os << ' ';
    os << c[e];
  }
  os << '\n';
  return os.str();
}

std::vector<std::size_t> encoding_candidates(const EncodedRecord& rec, const SetSystem& sys) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < sys.size(); ++t) {
    const ElementSet& T = sys[t];
    bool ok = std::all_of(T.members().begin(), T.members().end(),
                          [&](Element e) { return rec.recolored[e] == rec.part; });
    for (std::size_t i = 0; ok && i < rec.others.size(); ++i) {
      ok = intersect(sys[rec.others[i]], T) == rec.intersections[i];
    }
    if (ok) out.push_back(t);
  }
  return out;
}

EncodedRecord encode_bad_pair(const Coloring& c, const TupleOfSets& tuple, std::size_t part,
                              const SetSystem& sys) {
  check_tuple(sys, tuple);
  if (part >= tuple.size()) fail(ErrorCode::precondition, "part index out of range");
  if (c.size() != sys.ground().size) {
    fail(ErrorCode::precondition, "coloring does not cover the ground set");
  }
  const ElementSet& sj = sys[tuple[part]];
  std::vector<Color> recolored = c.assignment();
  for (Element e : sj.members()) recolored[e] = static_cast<Color>(part);

  EncodedRecord rec;
  rec.part = part;
  rec.recolored = Coloring(c.parts(), std::move(recolored));
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i == part) continue;
    rec.others.push_back(tuple[i]);
    rec.intersections.push_back(intersect(sys[tuple[i]], sj));
  }
  const auto candidates = encoding_candidates(rec, sys);
  auto it = std::find(candidates.begin(), candidates.end(), tuple[part]);
  if (it == candidates.end()) {
    fail(ErrorCode::internal, "S_j is missing from its own candidate list");
  }
  rec.index = static_cast<std::size_t>(it - candidates.begin()) + 1;
  return rec;
}

DecodedPair decode_partial(const EncodedRecord& rec, const SetSystem& sys) {
  const auto candidates = encoding_candidates(rec, sys);
  if (rec.index == 0 || rec.index > candidates.size()) {
    fail(ErrorCode::precondition, "record index " + std::to_string(rec.index) +
                                      " outside the " + std::to_string(candidates.size()) +
                                      " candidates");
  }
  const std::size_t sj = candidates[rec.index - 1];
  DecodedPair out;
  out.tuple.indices.reserve(rec.others.size() + 1);
  for (std::size_t i = 0, o = 0; i <= rec.others.size(); ++i) {
    out.tuple.indices.push_back(i == rec.part ? sj : rec.others[o++]);
  }
  out.colors.resize(rec.recolored.size());
  for (std::size_t e = 0; e < rec.recolored.size(); ++e) {
    if (!sys[sj].contains(static_cast<Element>(e))) out.colors[e] = rec.recolored[e];
  }
  return out;
}

}  // namespace inflation
