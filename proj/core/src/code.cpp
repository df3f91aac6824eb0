#include "tpc/code.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tpc {

Code::Code(int n) : n_(n) {
  if (n < 1 || n > kMaxLen) fail_usage("code length out of range");
  space_size_ = kPow3[n];
  bits_.assign((space_size_ + 63) / 64, 0);
}

size_t Code::size() const {
  size_t c = 0;
  for (uint64_t w : bits_) c += size_t(__builtin_popcountll(w));
  return c;
}

void Code::clear() { bits_.assign(bits_.size(), 0); }

std::vector<uint32_t> Code::members() const {
  std::vector<uint32_t> m;
  m.reserve(size());
  for_each([&](uint32_t idx) { m.push_back(idx); });
  return m;
}

Code Code::apply(const std::vector<uint32_t>& point_map) const {
  check(point_map.size() == space_size_, "point map size mismatch");
  Code r(n_);
  for_each([&](uint32_t idx) { r.insert(point_map[idx]); });
  return r;
}

Code Code::apply(const Isometry& g) const {
  const Space& sp = Space::get(n_);
  Code r(n_);
  for_each([&](uint32_t idx) { r.insert(g.apply_index(sp, idx)); });
  return r;
}

Code Code::translated(uint32_t v) const {
  const Space& sp = Space::get(n_);
  Code r(n_);
  for_each([&](uint32_t idx) { r.insert(sp.add(idx, v)); });
  return r;
}

bool Code::disjoint(const Code& o) const {
  check(n_ == o.n_, "code length mismatch");
  for (size_t b = 0; b < bits_.size(); ++b)
    if (bits_[b] & o.bits_[b]) return false;
  return true;
}

bool Code::subset_of(const Code& o) const {
  check(n_ == o.n_, "code length mismatch");
  for (size_t b = 0; b < bits_.size(); ++b)
    if (bits_[b] & ~o.bits_[b]) return false;
  return true;
}

size_t Code::intersection_size(const Code& o) const {
  check(n_ == o.n_, "code length mismatch");
  size_t c = 0;
  for (size_t b = 0; b < bits_.size(); ++b)
    c += size_t(__builtin_popcountll(bits_[b] & o.bits_[b]));
  return c;
}

Code Code::set_minus(const Code& o) const {
  check(n_ == o.n_, "code length mismatch");
  Code r = *this;
  for (size_t b = 0; b < bits_.size(); ++b) r.bits_[b] &= ~o.bits_[b];
  return r;
}

Code Code::set_union(const Code& o) const {
  check(n_ == o.n_, "code length mismatch");
  Code r = *this;
  for (size_t b = 0; b < bits_.size(); ++b) r.bits_[b] |= o.bits_[b];
  return r;
}

Code Code::set_intersect(const Code& o) const {
  check(n_ == o.n_, "code length mismatch");
  Code r = *this;
  for (size_t b = 0; b < bits_.size(); ++b) r.bits_[b] &= o.bits_[b];
  return r;
}

Code Code::complement() const {
  Code r(n_);
  for (size_t b = 0; b < bits_.size(); ++b) r.bits_[b] = ~bits_[b];
  // mask tail bits beyond the space
  uint32_t tail = space_size_ & 63;
  if (tail) r.bits_.back() &= (uint64_t(1) << tail) - 1;
  return r;
}

bool Code::lex_less(const Code& o) const {
  check(n_ == o.n_, "code length mismatch");
  for (size_t b = 0; b < bits_.size(); ++b) {
    uint64_t d = bits_[b] ^ o.bits_[b];
    if (!d) continue;
    // p = lowest differing point; the side holding p wins unless the other
    // side's sorted member list already ended (a proper prefix sorts first)
    unsigned bit = unsigned(__builtin_ctzll(d));
    bool mine = bits_[b] >> bit & 1;
    const auto& tail = mine ? o.bits_ : bits_;
    uint64_t above = tail[b] & (~uint64_t(0) << bit);
    for (size_t b2 = b + 1; !above && b2 < tail.size(); ++b2) above = tail[b2];
    return mine ? above != 0 : above == 0;
  }
  return false;
}

uint64_t Code::hash(uint64_t seed) const {
  uint64_t h = seed ^ (uint64_t(n_) * 0x9e3779b97f4a7c15ull);
  for (uint64_t w : bits_) {
    h ^= w;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  }
  return h;
}

int min_distance(const Code& c) {
  const Space& sp = Space::get(c.n());
  std::vector<uint32_t> m = c.members();
  int best = c.n() + 1;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) {
      int d = sp.weight(sp.sub(m[i], m[j]));
      if (d < best) best = d;
    }
  return best;
}

// ----- text io ---------------------------------------------------------------

Code read_code(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail_usage("empty code file");
  int n = -1;
  long size = -1;
  {
    std::istringstream hs(line);
    std::string tag, q, nf, sf;
    hs >> tag >> q >> nf >> sf;
    if (tag != "#" || q != "q=3" || nf.rfind("n=", 0) != 0 || sf.rfind("size=", 0) != 0)
      fail_usage("bad code header: " + line);
    try {
      n = std::stoi(nf.substr(2));
      size = std::stol(sf.substr(5));
    } catch (const std::exception&) {
      fail_usage("bad code header: " + line);
    }
  }
  if (n < 1 || n > kMaxLen) fail_usage("code header: n out of range");
  Code c(n);
  long count = 0;
  uint32_t prev = 0;
  // consume exactly `size` words so several codes can share one stream
  while (count < size && std::getline(in, line)) {
    if (line.empty()) continue;
    TernaryWord w = TernaryWord::parse(n, line);
    uint32_t idx = w.index();
    if (count > 0 && idx <= prev) fail_usage("code words out of order or duplicated");
    prev = idx;
    c.insert(idx);
    ++count;
  }
  if (count != size) fail_usage("code size does not match header");
  return c;
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_usage("cannot open " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const Code& c) {
  out << "# q=3 n=" << c.n() << " size=" << c.size() << "\n";
  c.for_each([&](uint32_t idx) { out << TernaryWord::from_index(c.n(), idx).str() << "\n"; });
}

void write_code_file(const std::string& path, const Code& c) {
  std::ofstream out(path);
  if (!out) fail_usage("cannot open " + path + " for writing");
  write_code(out, c);
  out.close();
  if (!out) fail_usage("error writing " + path);
}

}  // namespace tpc
