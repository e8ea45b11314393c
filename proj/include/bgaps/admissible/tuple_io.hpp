#pragma once

#include <filesystem>
#include <iosfwd>

#include "bgaps/admissible/sieves.hpp"
#include "bgaps/admissible/tuple.hpp"

namespace bgaps::admissible {

// One offset per line; '#' starts a comment; an optional leading "k=<int>" is validated.
Tuple read_tuple(std::istream& in);
Tuple load_tuple(const std::filesystem::path& path);
void write_tuple(std::ostream& out, const Tuple& t);
void save_tuple(const std::filesystem::path& path, const Tuple& t);

// Header "k s d m", then "n r" or "n" (residue 0) per line.
SieveRecord read_sieve_record(std::istream& in);
SieveRecord load_sieve_record(const std::filesystem::path& path);
void write_sieve_record(std::ostream& out, const SieveRecord& rec);

}  // namespace bgaps::admissible
