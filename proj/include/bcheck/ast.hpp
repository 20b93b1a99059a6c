#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bcheck/btype.hpp"
#include "bcheck/span.hpp"

namespace bcheck {

using BInt = boost::multiprecision::cpp_int;

enum class NodeKind {
    // expression atoms
    IntegerLiteral,   // number payload
    BooleanLiteral,   // flag payload
    StringLiteral,    // text payload
    IdentifierExpr,   // text payload
    BuiltinSetExpr,   // text payload: NATURAL NATURAL1 INTEGER NAT NAT1 INT BOOL STRING
    MinIntExpr,
    MaxIntExpr,
    EmptySetExpr,
    SetExtensionExpr, // children: elements (>=1)
    IntervalExpr,     // lo, hi
    EmptySeqExpr,
    SeqExtensionExpr, // children: elements (>=1)

    // arithmetic
    AddExpr,
    MinusOrSetSubtractExpr, // overloaded minus, dispatched at runtime
    MultOrCartExpr,         // `*` before typing; rewritten by the type checker
    MultExpr,
    CartExpr,
    DivExpr,
    ModExpr,
    PowerExpr,
    UnaryMinusExpr,
    SuccExpr,
    PredExpr,

    // sets
    PowSubsetsExpr,
    Pow1SubsetsExpr,
    FinSubsetsExpr,
    UnionExpr,
    InterExpr,
    CardExpr,
    MinExpr,
    MaxExpr,

    // relations
    RelationSetExpr, // A <-> B, membership-only class
    MapletExpr,      // a |-> b (also comma couples)
    DomainExpr,
    RangeExpr,
    InverseExpr,
    ImageExpr,       // r[s]
    CompositionExpr, // (r ; s)
    OverrideExpr,    // <+
    DomRestrictExpr, // <|
    RanRestrictExpr, // |>
    DomSubtractExpr, // <<|
    RanSubtractExpr, // |>>

    // function classes (membership-only, like RelationSetExpr)
    PartialFnExpr,
    TotalFnExpr,
    PartialInjExpr,
    TotalInjExpr,
    PartialSurjExpr,
    TotalSurjExpr,
    TotalBijExpr,
    ApplicationExpr, // f(x); multi-arguments collapse into a couple

    // sequences
    SeqSizeExpr,
    SeqConcatExpr,
    SeqFirstExpr,
    SeqLastExpr,
    SeqFrontExpr,
    SeqTailExpr,

    // binders and bool cast
    ComprehensionSetExpr, // IdList, predicate
    LambdaExpr,           // IdList, predicate, expression
    BoolCastExpr,         // bool(P)

    // predicates
    ConjunctPredicate,
    DisjunctPredicate,
    ImplicationPredicate,
    EquivalencePredicate,
    NegationPredicate,
    ForallPredicate, // IdList, predicate
    ExistsPredicate, // IdList, predicate
    EqualPredicate,
    NotEqualPredicate,
    LessPredicate,
    LessEqualPredicate,
    GreaterPredicate,
    GreaterEqualPredicate,
    MemberPredicate,
    NotMemberPredicate,
    SubsetPredicate,
    StrictSubsetPredicate,

    // substitutions
    SkipSubst,
    AssignSubst,          // ExprList lhs, ExprList rhs
    BecomesElementSubst,  // x :: S  (identifier, set expr)
    BecomesSuchThatSubst, // x : (P) (identifier, predicate)
    BlockSubst,           // BEGIN S END
    PreconditionSubst,    // PRE P THEN S END
    IfSubst,              // guard,body pairs, optional trailing else body
    SelectSubst,          // guard,body pairs, optional trailing else body
    ChoiceSubst,          // bodies
    AnySubst,             // IdList, predicate, body
    SequenceSubst,        // S ; T
    ParallelSubst,        // S || T

    // definition machinery (absent after expansion)
    DefinitionCall, // text payload: name; children: arguments
    CallSubst,      // definition call in substitution position

    // helper list nodes
    IdList,   // children: IdentifierExpr
    ExprList, // children: expressions
};

const char* node_kind_name(NodeKind kind);

// Fixed child arity per kind; {min, max} with max -1 meaning unbounded.
struct ArityRange {
    int min;
    int max;
};
ArityRange node_arity(NodeKind kind);

bool is_expression_kind(NodeKind kind);
bool is_predicate_kind(NodeKind kind);
bool is_substitution_kind(NodeKind kind);

struct AstNode {
    NodeKind kind = NodeKind::SkipSubst;
    std::vector<AstNode> children;
    std::string text;  // identifier / builtin / definition name
    BInt number;       // IntegerLiteral payload
    bool flag = false; // BooleanLiteral payload
    SourceSpan span;
    std::optional<BType> type; // present on identifier/expression nodes after typing

    AstNode() = default;
    explicit AstNode(NodeKind k) : kind(k) {}
    AstNode(NodeKind k, std::vector<AstNode> kids) : kind(k), children(std::move(kids)) {}
};

AstNode make_int(BInt value);
AstNode make_bool(bool value);
AstNode make_ident(std::string name);
AstNode make_node(NodeKind kind, std::vector<AstNode> children);

// Structural equality ignoring spans and inferred types.
bool same_tree(const AstNode& a, const AstNode& b);

// All free identifier names (IdentifierExpr not captured by a binder).
std::vector<std::string> free_identifiers(const AstNode& node);

// True if every node in the tree obeys the arity table.
bool check_arities(const AstNode& node, std::string* violation = nullptr);

struct ParseUnit {
    enum class Variant { Predicate, Expression, Substitution, Machine };
    Variant variant = Variant::Predicate;
    AstNode root;
};

struct Definition {
    std::string name;
    std::vector<std::string> params; // pairwise distinct
    AstNode body;                    // expression, predicate, or substitution
    SourceSpan span;
};

struct EnumeratedSetDecl {
    std::string name;
    std::vector<std::string> elements;
    SourceSpan span;
};

struct DeferredSetDecl {
    std::string name;
    SourceSpan span;
};

struct OperationDecl {
    std::string name;
    std::vector<std::string> params;
    AstNode body; // substitution; a PRE body carries the precondition
    SourceSpan span;
};

struct MachineAst {
    std::string name;
    std::vector<EnumeratedSetDecl> enumerated_sets;
    std::vector<DeferredSetDecl> deferred_sets;
    std::vector<std::string> constants;
    std::optional<AstNode> properties;
    std::vector<std::string> variables;
    std::optional<AstNode> invariant;
    std::vector<AstNode> assertions;
    std::vector<Definition> definitions;
    std::optional<AstNode> initialisation;
    std::vector<OperationDecl> operations;
    SourceSpan span;
};

// Splits nested conjunctions into their top-level conjuncts, left to right.
std::vector<const AstNode*> top_level_conjuncts(const AstNode& predicate);

} // namespace bcheck
