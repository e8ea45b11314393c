#include "bgaps/admissible/tuple_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgaps::admissible {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

template <class T>
T parse_int(std::string_view s, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> fields(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string f; is >> f;) out.push_back(f);
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

Tuple read_tuple(std::istream& in) {
  std::vector<std::int64_t> offsets;
  std::optional<std::size_t> declared;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto s = strip(line);
    if (s.empty()) continue;
    if (s.starts_with("k=")) {
      if (declared || !offsets.empty()) throw std::invalid_argument("line " + std::to_string(no) + ": misplaced k=");
      declared = parse_int<std::size_t>(std::string_view(s).substr(2), no);
      continue;
    }
    offsets.push_back(parse_int<std::int64_t>(s, no));
  }
  if (declared && *declared != offsets.size()) {
    throw std::invalid_argument("tuple file declares k=" + std::to_string(*declared) + " but lists " +
                                std::to_string(offsets.size()) + " offsets");
  }
  return Tuple(std::move(offsets));
}

Tuple load_tuple(const std::filesystem::path& path) {
  auto in = open(path);
  return read_tuple(in);
}

void write_tuple(std::ostream& out, const Tuple& t) {
  out << "k=" << t.size() << '\n';
  for (auto h : t.offsets()) out << h << '\n';
}

void save_tuple(const std::filesystem::path& path, const Tuple& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_tuple(out, t);
}

SieveRecord read_sieve_record(std::istream& in) {
  SieveRecord rec;
  bool header = false;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto f = fields(strip(line));
    if (f.empty()) continue;
    if (!header) {
      if (f.size() != 4) throw std::invalid_argument("sieve file header must be 'k s d m'");
      rec.k = parse_int<std::uint64_t>(f[0], no);
      rec.s = parse_int<std::int64_t>(f[1], no);
      rec.d = parse_int<std::int64_t>(f[2], no);
      rec.m = parse_int<std::uint64_t>(f[3], no);
      header = true;
    } else if (f.size() == 1) {
      rec.classes.emplace_back(parse_int<std::uint64_t>(f[0], no), 0);
    } else if (f.size() == 2) {
      rec.classes.emplace_back(parse_int<std::uint64_t>(f[0], no), parse_int<std::uint64_t>(f[1], no));
    } else {
      throw std::invalid_argument("line " + std::to_string(no) + ": expected 'n' or 'n r'");
    }
  }
  if (!header) throw std::invalid_argument("sieve file has no header");
  return rec;
}

SieveRecord load_sieve_record(const std::filesystem::path& path) {
  auto in = open(path);
  return read_sieve_record(in);
}

void write_sieve_record(std::ostream& out, const SieveRecord& rec) {
  out << rec.k << ' ' << rec.s << ' ' << rec.d << ' ' << rec.m << '\n';
  for (const auto& [n, r] : rec.classes) {
    out << n;
    if (r != 0) out << ' ' << r;
    out << '\n';
  }
}

}  // namespace bgaps::admissible
