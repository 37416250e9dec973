#include "inflation/setsystem.hpp"

#include "inflation/error.hpp"
#include "inflation/rational.hpp"
#include "inflation/rng.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

namespace inflation {

ElementSet::ElementSet(std::initializer_list<Element> members)
    : ElementSet(std::vector<Element>(members)) {}

ElementSet::ElementSet(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    fail(ErrorCode::parse, "repeated element in set");
  }
}

bool ElementSet::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                 b.members().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet difference(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                      b.members().end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

SetSystem::SetSystem(GroundSet ground, std::size_t width, std::vector<ElementSet> sets)
    : ground_(ground), width_(width), sets_(std::move(sets)),
      masks_(sets_.size(), ground.size) {
  if (ground_.original_size > ground_.size) {
    fail(ErrorCode::infeasible, "ground original_size exceeds size");
  }
  std::set<ElementSet> seen;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const ElementSet& s = sets_[i];
    if (s.size() > width_) {
      fail(ErrorCode::infeasible, "set " + std::to_string(i) + " exceeds width " +
                                      std::to_string(width_));
    }
    if (!s.empty() && s.max_member() >= ground_.size) {
      fail(ErrorCode::infeasible, "set " + std::to_string(i) + " leaves the ground set");
    }
    if (!seen.insert(s).second) {
      fail(ErrorCode::infeasible, "set " + std::to_string(i) + " is a duplicate");
    }
    for (Element e : s.members()) masks_.set(i, e);
  }
}

std::optional<std::size_t> SetSystem::find(const ElementSet& s) const {
  auto it = std::find(sets_.begin(), sets_.end(), s);
  if (it == sets_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

bool SetSystem::is_full_width() const {
  return std::all_of(sets_.begin(), sets_.end(),
                     [&](const ElementSet& s) { return s.size() == width_; });
}

std::size_t SetSystem::empty_set_count() const {
  return static_cast<std::size_t>(
      std::count_if(sets_.begin(), sets_.end(), [](const ElementSet& s) { return s.empty(); }));
}

void check_tuple(const SetSystem& sys, const TupleOfSets& tuple) {
  for (std::size_t idx : tuple.indices) {
    if (idx >= sys.size()) {
      fail(ErrorCode::precondition, "tuple index " + std::to_string(idx) +
                                        " out of range for a family of " +
                                        std::to_string(sys.size()));
    }
  }
}

ElementSet PaddedSystem::strip(const ElementSet& s) const {
  std::vector<Element> kept;
  for (Element e : s.members()) {
    if (e < original_ground) kept.push_back(e);
  }
  return ElementSet(std::move(kept));
}

PaddedSystem pad_to_width(const SetSystem& sys) {
  std::size_t next = sys.ground().size;
  std::vector<ElementSet> padded;
  padded.reserve(sys.size());
  for (const ElementSet& s : sys.sets()) {
    std::vector<Element> members = s.members();
    while (members.size() < sys.width()) members.push_back(static_cast<Element>(next++));
    padded.emplace_back(std::move(members));
  }
  GroundSet ground{next, sys.ground().original_size};
  return {SetSystem(ground, sys.width(), std::move(padded)), sys.ground().original_size};
}

SetSystem pad_ground_to_multiple(const SetSystem& sys, std::size_t k) {
  if (k < 2) fail(ErrorCode::precondition, "k must be at least 2");
  GroundSet ground = sys.ground();
  ground.size += (k - ground.size % k) % k;
  return SetSystem(ground, sys.width(), sys.sets());
}

SetSystem normalize(const SetSystem& sys, std::size_t k) {
  return pad_ground_to_multiple(pad_to_width(sys).system, k);
}

SetSystem link(const SetSystem& sys, const ElementSet& u) {
  std::vector<ElementSet> out;
  std::set<ElementSet> seen;
  for (const ElementSet& s : sys.sets()) {
    if (!u.subset_of(s)) continue;
    ElementSet rest = difference(s, u);
    if (seen.insert(rest).second) out.push_back(std::move(rest));
  }
  return SetSystem(sys.ground(), sys.width(), std::move(out));
}

namespace {

// Calls fn(members) for every w-subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t m, std::size_t w, Fn&& fn) {
  std::vector<Element> comb(w);
  for (std::size_t i = 0; i < w; ++i) comb[i] = static_cast<Element>(i);
  while (true) {
    fn(comb);
    std::size_t i = w;
    while (i > 0 && comb[i - 1] == m - w + i - 1) --i;
    if (i == 0) return;
    ++comb[i - 1];
    for (std::size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace

SetSystem generate_complete_family(std::size_t m, std::size_t w) {
  if (w > m) fail(ErrorCode::infeasible, "width exceeds ground size");
  std::vector<ElementSet> sets;
  for_each_combination(m, w, [&](const std::vector<Element>& c) { sets.emplace_back(c); });
  return SetSystem(GroundSet::plain(m), w, std::move(sets));
}

SetSystem generate_uniform_family(std::size_t m, std::size_t w, std::size_t count,
                                  std::uint64_t seed) {
  const BigInt available = binomial(m, w);
  if (w > m || BigInt(count) > available) {
    fail(ErrorCode::infeasible, "cannot choose " + std::to_string(count) + " distinct " +
                                    std::to_string(w) + "-subsets of " + std::to_string(m) +
                                    " elements");
  }
  Rng rng(seed);
  std::vector<ElementSet> sets;
  if (available <= 4 * BigInt(count) && available <= 2'000'000) {
    std::vector<ElementSet> all;
    for_each_combination(m, w, [&](const std::vector<Element>& c) { all.emplace_back(c); });
    // partial Fisher-Yates
    for (std::size_t i = 0; i < count; ++i) {
      std::swap(all[i], all[i + uniform_below(rng, all.size() - i)]);
    }
    sets.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
  } else {
    std::set<ElementSet> chosen;
    while (chosen.size() < count) {
      // Floyd's algorithm for a uniform w-subset
      std::set<Element> pick;
      for (std::size_t j = m - w; j < m; ++j) {
        auto t = static_cast<Element>(uniform_below(rng, j + 1));
        if (!pick.insert(t).second) pick.insert(static_cast<Element>(j));
      }
      chosen.insert(ElementSet(std::vector<Element>(pick.begin(), pick.end())));
    }
    sets.assign(chosen.begin(), chosen.end());
  }
  std::sort(sets.begin(), sets.end());
  return SetSystem(GroundSet::plain(m), w, std::move(sets));
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": bad element id '" +
                               std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ParsedSystem parse_set_system(std::string_view text, std::optional<std::size_t> width) {
  std::optional<std::uint64_t> declared_ground;
  std::vector<std::vector<std::uint64_t>> raw;
  std::set<std::vector<std::uint64_t>> seen;
  std::size_t line_no = 0;
  bool seen_content = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '!') {
      auto tokens = split_ws(line);
      if (tokens[0] != "!ground" || tokens.size() != 2) {
        fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": unknown directive");
      }
      if (seen_content || declared_ground) {
        fail(ErrorCode::parse,
             "line " + std::to_string(line_no) + ": !ground must be the first directive line");
      }
      declared_ground = parse_id(tokens[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;

    std::vector<std::uint64_t> ids;
    if (line != "{}") {
      for (auto token : split_ws(line)) ids.push_back(parse_id(token, line_no));
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": repeated element");
    }
    if (!seen.insert(ids).second) {
      fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": duplicate set");
    }
    raw.push_back(std::move(ids));
  }

  ParsedSystem out;
  std::map<std::uint64_t, Element> dense;
  std::size_t ground_size = 0;
  if (declared_ground) {
    ground_size = *declared_ground;
    for (const auto& ids : raw) {
      for (auto id : ids) {
        if (id >= ground_size) {
          fail(ErrorCode::parse, "element " + std::to_string(id) + " outside !ground " +
                                     std::to_string(ground_size));
        }
      }
    }
    for (std::size_t e = 0; e < ground_size; ++e) {
      dense[e] = static_cast<Element>(e);
    }
  } else {
    for (const auto& ids : raw) {
      for (auto id : ids) dense.emplace(id, 0);
    }
    Element next = 0;
    for (auto& [id, slot] : dense) {
      slot = next++;
      if (id != slot) out.remapped = true;
    }
    ground_size = dense.size();
  }
  out.original_ids.reserve(dense.size());
  for (const auto& [id, slot] : dense) out.original_ids.push_back(id);

  std::size_t max_size = 0;
  std::vector<ElementSet> sets;
  sets.reserve(raw.size());
  for (const auto& ids : raw) {
    std::vector<Element> members;
    for (auto id : ids) members.push_back(dense.at(id));
    max_size = std::max(max_size, members.size());
    sets.emplace_back(std::move(members));
  }
  const std::size_t w = width.value_or(max_size);
  if (w < max_size) {
    fail(ErrorCode::parse, "a set has " + std::to_string(max_size) +
                               " elements, more than the declared width " + std::to_string(w));
  }
  out.system = SetSystem(GroundSet::plain(ground_size), w, std::move(sets));
  return out;
}

std::string serialize(const SetSystem& sys) {
  std::ostringstream os;
  os << "!ground " << sys.ground().size << '\n';
  for (const ElementSet& s : sys.sets()) {
    if (s.empty()) {
      os << "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << ' ';
      os << s.members()[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::infeasible, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace inflation
