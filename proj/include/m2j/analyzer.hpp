#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "m2j/class_model.hpp"
#include "m2j/frontend.hpp"
#include "m2j/project_index.hpp"

namespace m2j {

// Per-class (or summed) census counters.
struct IdiomCounts {
    long files = 0;
    long classes = 0;
    long loc = 0;

    long single_base = 0;
    long multiple_inheritance = 0;
    long mi_dao_other = 0;    // one DAO, one other
    long mi_chain_other = 0;  // one Chain, one other
    long mi_chain_dao = 0;    // one Chain, one DAO
    long mi_multiple = 0;     // every other combination

    long stream_io_uses = 0;
    long ctors_beyond_delegation = 0;
    long dtors_with_code = 0;
    long enum_int_assignments = 0;
    long throw_sites = 0;
    long catch_sites = 0;

    IdiomCounts& operator+=(const IdiomCounts& o);
    bool operator==(const IdiomCounts&) const = default;
};

// Scope for C++-side typing of method bodies.
struct ScanEnv {
    TypedefTable typedefs = TypedefTable::builtin();
    std::set<std::string, std::less<>> enum_names;
    std::map<std::string, std::string, std::less<>> enumerator_owner;
};

ScanEnv scan_env_for(const AstNode& tu, const TypedefTable& builtins = TypedefTable::builtin());

// Counts that come from the class shape alone: inheritance, constructors,
// destructors. classes = 1.
IdiomCounts scan_structure(const ClassModel& c, const ProjectIndex& idx);
// Counts inside one method body (streams, enum/int crossings, throw, catch).
IdiomCounts scan_method(const MethodModel& m, const ClassModel& c, const ScanEnv& env);
// scan_structure plus scan_method over every method.
IdiomCounts scan_class(const ClassModel& c, const ProjectIndex& idx, const ScanEnv& env);
IdiomCounts scan_class(const ClassModel& c, const ProjectIndex& idx);

// Non-blank lines that are not only a comment.
long count_loc(std::string_view text);

// files = 1, loc, plus every class defined in the unit. Throws on parse errors.
IdiomCounts scan_unit(const SourceUnit& src, const ProjectIndex& idx);

IdiomCounts sum_counts(const std::vector<IdiomCounts>& counts);
// Two plain-text tables: artifact statistics and the inheritance breakdown.
std::string aggregate_report(const std::vector<IdiomCounts>& counts);
// key=value lines, one per counter.
std::string kv_dump(const IdiomCounts& c);

}  // namespace m2j
