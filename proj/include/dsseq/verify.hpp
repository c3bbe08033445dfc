#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dsseq/decompose.hpp"
#include "dsseq/report.hpp"

namespace dsseq {

// Brute-force oracles. They share no code with pages or decompose beyond the module type and
// the linear algebra kernel.

// Page dims straight from the r-chain definitions, solved as one dense system over the whole
// charge-zero part. Throws Error(InvalidArgument) when that part has dimension 60 or more.
DimTable oracle_pages(const SuperModule& m, int r, Order order);

// Exhaustive search over multisets of indecomposables whose dims fit, keeping those whose
// fingerprint matches: page dims from oracle_pages for every r and both orders, ranks of x, y
// and xy on each block, and dims of Hom(W(k)_s, -) from a dense commutation solve.
// Throws Error(Verification) if more than one multiset survives.
Multiset oracle_decompose(const SuperModule& m);

// Corpus of modules shared by the acceptance suites.
struct CorpusModule {
  std::string name;
  SuperModule module;
};

std::vector<CorpusModule> standard_corpus();

struct RandomCase {
  Multiset summands;
  SuperModule module;  // the sum, scrambled by random_basis_change
};

// 1 to max_summands indecomposables with |n| <= 4, twists in {0, +-1/2, +-1}, random parity.
RandomCase random_case(std::mt19937_64& rng, int max_summands);
std::vector<CorpusModule> random_corpus(std::uint64_t seed, int count);

// Acceptance criteria.
enum class Status { Pass, Fail, NotReproducible };
const char* to_string(Status s);

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few failing cases
  std::string note;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> results;
  bool ok() const;
};

constexpr std::uint64_t kDefaultSeed = 20240611;

const std::vector<std::string>& suite_names();  // in criterion order
CriterionResult run_suite(const std::string& name, std::uint64_t seed);
// Empty names runs every suite.
VerifyReport run_suites(const std::vector<std::string>& names, std::uint64_t seed);
// One line per criterion, headed by the seed; ok iff every criterion passed.
Report report_verify(const VerifyReport& r);

}  // namespace dsseq
