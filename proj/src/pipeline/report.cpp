#include "bgaps/pipeline/report.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "bgaps/common/hash.hpp"

namespace bgaps::pipeline {

namespace {

constexpr std::string_view kHeader = "# bgaps claims report";

using Fields = std::map<std::string, std::string>;
using bgaps::to_string;
using pipeline::to_string;

void put(std::ostream& out, const std::string& key, const std::string& value) { out << key << '=' << value << '\n'; }

void emit_dhl(std::ostream& out, const DHLClaim& d) {
  put(out, "dhl.statement", d.name());
  put(out, "dhl.k", std::to_string(d.k));
  put(out, "dhl.m", std::to_string(d.m));
  put(out, "dhl.rule", to_string(d.rule));
  put(out, "dhl.hypothesis", d.hyp.to_string());
  put(out, "dhl.eps", to_string(d.eps));
  put(out, "dhl.C", to_string(d.C));
  put(out, "dhl.C.decimal", to_decimal(d.C, 12));
  put(out, "dhl.source", d.source);
  put(out, "dhl.source_hash", d.source_hash.empty() ? "-" : d.source_hash);
  put(out, "dhl.threshold", to_string(d.threshold));
  put(out, "dhl.margin", to_string(d.margin()));
  put(out, "dhl.margin.decimal", to_decimal(d.margin(), 15));
  put(out, "dhl.sides", std::to_string(d.sides.size()));
  for (std::size_t i = 0; i < d.sides.size(); ++i) {
    const auto& s = d.sides[i];
    std::string p = "dhl.side." + std::to_string(i + 1) + ".";
    put(out, p + "name", s.name);
    put(out, p + "lhs", to_string(s.lhs));
    put(out, p + "rhs", to_string(s.rhs));
    put(out, p + "strict", s.strict ? "1" : "0");
  }
}

std::string join_offsets(const admissible::Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

const std::string& field(const Fields& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end()) throw std::invalid_argument("report is missing " + key);
  return it->second;
}

std::uint64_t field_u64(const Fields& f, const std::string& key) { return std::stoull(field(f, key)); }

DHLClaim parse_dhl(const Fields& f) {
  DHLClaim d;
  d.k = field_u64(f, "dhl.k");
  d.m = static_cast<unsigned>(field_u64(f, "dhl.m"));
  d.rule = parse_dhl_rule(field(f, "dhl.rule"));
  d.hyp = parse_hypothesis(field(f, "dhl.hypothesis"));
  d.eps = parse_rational(field(f, "dhl.eps"));
  d.C = parse_rational(field(f, "dhl.C"));
  d.source = field(f, "dhl.source");
  d.source_hash = field(f, "dhl.source_hash");
  if (d.source_hash == "-") d.source_hash.clear();
  d.threshold = parse_rational(field(f, "dhl.threshold"));
  auto n = field_u64(f, "dhl.sides");
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::string p = "dhl.side." + std::to_string(i) + ".";
    d.sides.push_back({field(f, p + "name"), parse_rational(field(f, p + "lhs")), parse_rational(field(f, p + "rhs")),
                       field(f, p + "strict") == "1"});
  }
  return d;
}

admissible::Tuple parse_offsets(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stoll(item));
  return admissible::Tuple(std::move(v));
}

std::vector<Fields> split_blocks(std::string_view text) {
  std::vector<Fields> blocks;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == kHeader) {
      header = true;
      continue;
    }
    if (line.front() == '#') continue;
    if (line.front() == '[') {
      blocks.emplace_back();
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed report line: " + line);
    if (blocks.empty()) continue;  // top-level summary keys
    blocks.back()[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (!header) throw std::invalid_argument("not a claims report");
  return blocks;
}

}  // namespace

std::string emit_report(const std::vector<Claim>& claims) {
  std::ostringstream out;
  out << kHeader << '\n';
  put(out, "format", "1");
  put(out, "claims", std::to_string(claims.size()));
  std::size_t index = 0;
  for (const auto& c : claims) {
    out << "\n[claim " << ++index << "]\n";
    if (const auto* d = std::get_if<DHLClaim>(&c)) {
      put(out, "kind", "dhl");
      emit_dhl(out, *d);
      continue;
    }
    const auto& h = std::get<HmClaim>(c);
    put(out, "kind", "hm");
    put(out, "statement", "H_" + std::to_string(h.m) + " <= " + std::to_string(h.bound));
    put(out, "hm.m", std::to_string(h.m));
    put(out, "hm.bound", std::to_string(h.bound));
    put(out, "tuple.k", std::to_string(h.tuple.size()));
    put(out, "tuple.diameter", std::to_string(h.tuple.diameter()));
    put(out, "tuple.hash", h.tuple_hash.empty() ? "-" : h.tuple_hash);
    put(out, "tuple.content_hash", content_hash(join_offsets(h.tuple)));
    put(out, "tuple.offsets", join_offsets(h.tuple));
    emit_dhl(out, h.dhl);
  }
  return out.str();
}

std::vector<Claim> parse_report(std::string_view text) {
  std::vector<Claim> claims;
  for (const auto& f : split_blocks(text)) {
    const auto& kind = field(f, "kind");
    if (kind == "dhl") {
      claims.emplace_back(parse_dhl(f));
    } else if (kind == "hm") {
      auto tuple = parse_offsets(field(f, "tuple.offsets"));
      std::string hash = field(f, "tuple.hash");
      if (hash == "-") hash.clear();
      if (field(f, "tuple.content_hash") != content_hash(field(f, "tuple.offsets"))) {
        throw std::invalid_argument("tuple content hash mismatch");
      }
      claims.emplace_back(HmClaim{static_cast<unsigned>(field_u64(f, "hm.m")), std::stoll(field(f, "hm.bound")),
                                  std::move(tuple), std::move(hash), parse_dhl(f)});
    } else {
      throw std::invalid_argument("unknown claim kind: " + kind);
    }
  }
  return claims;
}

AuditResult audit_report(std::string_view text) {
  AuditResult r;
  std::vector<Claim> claims;
  try {
    claims = parse_report(text);
  } catch (const std::exception& e) {
    r.problems.push_back(e.what());
    return r;
  }
  r.claims = claims.size();
  for (const auto& c : claims) {
    auto p = std::visit([](const auto& x) { return audit(x); }, c);
    r.problems.insert(r.problems.end(), p.begin(), p.end());
  }
  return r;
}

}  // namespace bgaps::pipeline
