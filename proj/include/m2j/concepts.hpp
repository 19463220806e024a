#pragma once

#include <string>

#include "m2j/class_model.hpp"
#include "m2j/transpile.hpp"

namespace m2j {

InheritanceStrategy classify_inheritance(const ClassModel& c, const ProjectIndex& idx);
// Same decision from the index alone; used for ancestors defined in other files.
InheritanceStrategy classify_indexed(std::string_view cls, const ProjectIndex& idx);

// "is a" -> "has a": the DAO base goes away, m_oDAO takes its place and DAO
// member uses are re-rooted onto it. Also re-roots uses in classes whose
// ancestor already holds m_oDAO. Throws UnresolvedDaoAccess.
ClassModel rewrite_dao_inheritance(ClassModel c, const ProjectIndex& idx, const RuleSet* rules = nullptr);

// Chain base removed, Link implemented, run(ChainMgm ChainMgm), base run call
// replaced by ChainMgm.runNext(). Throws MissingRunMethod.
ClassModel rewrite_chain_inheritance(ClassModel c, const ProjectIndex& idx);

// No fields, at least one method, every method virtual, no non-trivial
// constructor or destructor.
bool detect_interface_candidate(const ClassModel& c);

// Runs classification and every applicable rewrite; fills extends/implements.
ClassModel apply_concepts(ClassModel c, const ProjectIndex& idx, const RuleSet* rules = nullptr);

// Java enum with asNum/forNum. Duplicate values add a DuplicateEnumValue
// warning; forNum then returns the first entry with that value.
std::string generate_enum(const EnumModel& e, int depth = 0, DiagnosticList* diags = nullptr);

enum class EnumBridge { EnumToInt, IntToEnum };
EmittedExpr rewrite_enum_int_bridge(const EmittedExpr& e, EnumBridge direction, const JavaType& target);

// Flattened `a << b << c` chain: [a, b, c].
std::vector<const AstNode*> flatten_stream_chain(const AstNode& e);
// True when `s` is an ExprStmt whose expression is a shift chain on a stream.
bool is_stream_statement(const AstNode& s, ConversionContext& ctx);
// Java statement text (no indent, no newline). Throws UnsupportedStreamKind for input.
std::string rewrite_stream_statement(const AstNode& s, ConversionContext& ctx);

bool is_resource_declaration(const AstNode& s, ConversionContext& ctx);
// Java text for a block, resource declarations lifted into try headers.
std::string apply_try_with_resources(const AstNode& block, ConversionContext& ctx, int depth = 0);

}  // namespace m2j
