#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qinv/diagram.hpp"
#include "qinv/laurent.hpp"

namespace qtest {

// Seed shared by every randomized test in the process. Set from --seed.
std::uint64_t seed();
void set_seed(std::uint64_t s);

// Strips "--seed N" / "--seed=N" from argv. Returns false on a malformed value.
bool consume_seed_flag(int& argc, char** argv);

// Independent stream per test so that reordering tests does not shift values.
std::mt19937_64 rng(std::string_view salt);

// "input | expected" lines; '#' starts a comment line.
std::vector<std::pair<std::string, std::string>> read_golden(const std::string& name);
std::string golden_path(const std::string& name);

// Every braid word on 1..max_strands strands with at most max_letters letters.
void for_each_braid(int max_strands, int max_letters, const std::function<void(const qinv::BraidWord&)>& fn);

// The PD half of the skein corpus, parsed.
std::vector<qinv::LinkDiagram> pd_corpus();

// Kauffman bracket of a braid closure computed in the Temperley-Lieb algebra:
// sigma -> A + A^-1 e, sigma^-1 -> A^-1 + A e, closed by the Markov trace with
// loop value -A^2 - A^-2. Shares nothing with the PD state sum.
qinv::IntLaurent tl_bracket(const qinv::BraidWord& b);
qinv::IntLaurent tl_jones(const qinv::BraidWord& b);

}  // namespace qtest
