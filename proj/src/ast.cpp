#include "bcheck/ast.hpp"

#include <algorithm>
#include <set>

namespace bcheck {

const char* node_kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::IntegerLiteral: return "IntegerLiteral";
    case NodeKind::BooleanLiteral: return "BooleanLiteral";
    case NodeKind::StringLiteral: return "StringLiteral";
    case NodeKind::IdentifierExpr: return "IdentifierExpr";
    case NodeKind::BuiltinSetExpr: return "BuiltinSetExpr";
    case NodeKind::MinIntExpr: return "MinIntExpr";
    case NodeKind::MaxIntExpr: return "MaxIntExpr";
    case NodeKind::EmptySetExpr: return "EmptySetExpr";
    case NodeKind::SetExtensionExpr: return "SetExtensionExpr";
    case NodeKind::IntervalExpr: return "IntervalExpr";
    case NodeKind::EmptySeqExpr: return "EmptySeqExpr";
    case NodeKind::SeqExtensionExpr: return "SeqExtensionExpr";
    case NodeKind::AddExpr: return "AddExpr";
    case NodeKind::MinusOrSetSubtractExpr: return "MinusOrSetSubtractExpr";
    case NodeKind::MultOrCartExpr: return "MultOrCartExpr";
    case NodeKind::MultExpr: return "MultExpr";
    case NodeKind::CartExpr: return "CartExpr";
    case NodeKind::DivExpr: return "DivExpr";
    case NodeKind::ModExpr: return "ModExpr";
    case NodeKind::PowerExpr: return "PowerExpr";
    case NodeKind::UnaryMinusExpr: return "UnaryMinusExpr";
    case NodeKind::SuccExpr: return "SuccExpr";
    case NodeKind::PredExpr: return "PredExpr";
    case NodeKind::PowSubsetsExpr: return "PowSubsetsExpr";
    case NodeKind::Pow1SubsetsExpr: return "Pow1SubsetsExpr";
    case NodeKind::FinSubsetsExpr: return "FinSubsetsExpr";
    case NodeKind::UnionExpr: return "UnionExpr";
    case NodeKind::InterExpr: return "InterExpr";
    case NodeKind::CardExpr: return "CardExpr";
    case NodeKind::MinExpr: return "MinExpr";
    case NodeKind::MaxExpr: return "MaxExpr";
    case NodeKind::RelationSetExpr: return "RelationSetExpr";
    case NodeKind::MapletExpr: return "MapletExpr";
    case NodeKind::DomainExpr: return "DomainExpr";
    case NodeKind::RangeExpr: return "RangeExpr";
    case NodeKind::InverseExpr: return "InverseExpr";
    case NodeKind::ImageExpr: return "ImageExpr";
    case NodeKind::CompositionExpr: return "CompositionExpr";
    case NodeKind::OverrideExpr: return "OverrideExpr";
    case NodeKind::DomRestrictExpr: return "DomRestrictExpr";
    case NodeKind::RanRestrictExpr: return "RanRestrictExpr";
    case NodeKind::DomSubtractExpr: return "DomSubtractExpr";
    case NodeKind::RanSubtractExpr: return "RanSubtractExpr";
    case NodeKind::PartialFnExpr: return "PartialFnExpr";
    case NodeKind::TotalFnExpr: return "TotalFnExpr";
    case NodeKind::PartialInjExpr: return "PartialInjExpr";
    case NodeKind::TotalInjExpr: return "TotalInjExpr";
    case NodeKind::PartialSurjExpr: return "PartialSurjExpr";
    case NodeKind::TotalSurjExpr: return "TotalSurjExpr";
    case NodeKind::TotalBijExpr: return "TotalBijExpr";
    case NodeKind::ApplicationExpr: return "ApplicationExpr";
    case NodeKind::SeqSizeExpr: return "SeqSizeExpr";
    case NodeKind::SeqConcatExpr: return "SeqConcatExpr";
    case NodeKind::SeqFirstExpr: return "SeqFirstExpr";
    case NodeKind::SeqLastExpr: return "SeqLastExpr";
    case NodeKind::SeqFrontExpr: return "SeqFrontExpr";
    case NodeKind::SeqTailExpr: return "SeqTailExpr";
    case NodeKind::ComprehensionSetExpr: return "ComprehensionSetExpr";
    case NodeKind::LambdaExpr: return "LambdaExpr";
    case NodeKind::BoolCastExpr: return "BoolCastExpr";
    case NodeKind::ConjunctPredicate: return "ConjunctPredicate";
    case NodeKind::DisjunctPredicate: return "DisjunctPredicate";
    case NodeKind::ImplicationPredicate: return "ImplicationPredicate";
    case NodeKind::EquivalencePredicate: return "EquivalencePredicate";
    case NodeKind::NegationPredicate: return "NegationPredicate";
    case NodeKind::ForallPredicate: return "ForallPredicate";
    case NodeKind::ExistsPredicate: return "ExistsPredicate";
    case NodeKind::EqualPredicate: return "EqualPredicate";
    case NodeKind::NotEqualPredicate: return "NotEqualPredicate";
    case NodeKind::LessPredicate: return "LessPredicate";
    case NodeKind::LessEqualPredicate: return "LessEqualPredicate";
    case NodeKind::GreaterPredicate: return "GreaterPredicate";
    case NodeKind::GreaterEqualPredicate: return "GreaterEqualPredicate";
    case NodeKind::MemberPredicate: return "MemberPredicate";
    case NodeKind::NotMemberPredicate: return "NotMemberPredicate";
    case NodeKind::SubsetPredicate: return "SubsetPredicate";
    case NodeKind::StrictSubsetPredicate: return "StrictSubsetPredicate";
    case NodeKind::SkipSubst: return "SkipSubst";
    case NodeKind::AssignSubst: return "AssignSubst";
    case NodeKind::BecomesElementSubst: return "BecomesElementSubst";
    case NodeKind::BecomesSuchThatSubst: return "BecomesSuchThatSubst";
    case NodeKind::BlockSubst: return "BlockSubst";
    case NodeKind::PreconditionSubst: return "PreconditionSubst";
    case NodeKind::IfSubst: return "IfSubst";
    case NodeKind::SelectSubst: return "SelectSubst";
    case NodeKind::ChoiceSubst: return "ChoiceSubst";
    case NodeKind::AnySubst: return "AnySubst";
    case NodeKind::SequenceSubst: return "SequenceSubst";
    case NodeKind::ParallelSubst: return "ParallelSubst";
    case NodeKind::DefinitionCall: return "DefinitionCall";
    case NodeKind::CallSubst: return "CallSubst";
    case NodeKind::IdList: return "IdList";
    case NodeKind::ExprList: return "ExprList";
    }
    return "?";
}

ArityRange node_arity(NodeKind kind) {
    switch (kind) {
    case NodeKind::IntegerLiteral:
    case NodeKind::BooleanLiteral:
    case NodeKind::StringLiteral:
    case NodeKind::IdentifierExpr:
    case NodeKind::BuiltinSetExpr:
    case NodeKind::MinIntExpr:
    case NodeKind::MaxIntExpr:
    case NodeKind::EmptySetExpr:
    case NodeKind::EmptySeqExpr:
    case NodeKind::SkipSubst:
        return {0, 0};

    case NodeKind::UnaryMinusExpr:
    case NodeKind::SuccExpr:
    case NodeKind::PredExpr:
    case NodeKind::PowSubsetsExpr:
    case NodeKind::Pow1SubsetsExpr:
    case NodeKind::FinSubsetsExpr:
    case NodeKind::CardExpr:
    case NodeKind::MinExpr:
    case NodeKind::MaxExpr:
    case NodeKind::DomainExpr:
    case NodeKind::RangeExpr:
    case NodeKind::InverseExpr:
    case NodeKind::SeqSizeExpr:
    case NodeKind::SeqFirstExpr:
    case NodeKind::SeqLastExpr:
    case NodeKind::SeqFrontExpr:
    case NodeKind::SeqTailExpr:
    case NodeKind::BoolCastExpr:
    case NodeKind::NegationPredicate:
    case NodeKind::BlockSubst:
        return {1, 1};

    case NodeKind::SetExtensionExpr:
    case NodeKind::SeqExtensionExpr:
        return {1, -1};

    case NodeKind::IntervalExpr:
    case NodeKind::AddExpr:
    case NodeKind::MinusOrSetSubtractExpr:
    case NodeKind::MultOrCartExpr:
    case NodeKind::MultExpr:
    case NodeKind::CartExpr:
    case NodeKind::DivExpr:
    case NodeKind::ModExpr:
    case NodeKind::PowerExpr:
    case NodeKind::UnionExpr:
    case NodeKind::InterExpr:
    case NodeKind::RelationSetExpr:
    case NodeKind::MapletExpr:
    case NodeKind::ImageExpr:
    case NodeKind::CompositionExpr:
    case NodeKind::OverrideExpr:
    case NodeKind::DomRestrictExpr:
    case NodeKind::RanRestrictExpr:
    case NodeKind::DomSubtractExpr:
    case NodeKind::RanSubtractExpr:
    case NodeKind::PartialFnExpr:
    case NodeKind::TotalFnExpr:
    case NodeKind::PartialInjExpr:
    case NodeKind::TotalInjExpr:
    case NodeKind::PartialSurjExpr:
    case NodeKind::TotalSurjExpr:
    case NodeKind::TotalBijExpr:
    case NodeKind::ApplicationExpr:
    case NodeKind::SeqConcatExpr:
    case NodeKind::ConjunctPredicate:
    case NodeKind::DisjunctPredicate:
    case NodeKind::ImplicationPredicate:
    case NodeKind::EquivalencePredicate:
    case NodeKind::EqualPredicate:
    case NodeKind::NotEqualPredicate:
    case NodeKind::LessPredicate:
    case NodeKind::LessEqualPredicate:
    case NodeKind::GreaterPredicate:
    case NodeKind::GreaterEqualPredicate:
    case NodeKind::MemberPredicate:
    case NodeKind::NotMemberPredicate:
    case NodeKind::SubsetPredicate:
    case NodeKind::StrictSubsetPredicate:
    case NodeKind::ForallPredicate:
    case NodeKind::ExistsPredicate:
    case NodeKind::ComprehensionSetExpr:
    case NodeKind::AssignSubst:
    case NodeKind::BecomesElementSubst:
    case NodeKind::BecomesSuchThatSubst:
    case NodeKind::PreconditionSubst:
    case NodeKind::SequenceSubst:
    case NodeKind::ParallelSubst:
        return {2, 2};

    case NodeKind::LambdaExpr:
    case NodeKind::AnySubst:
        return {3, 3};

    case NodeKind::IfSubst:
    case NodeKind::SelectSubst:
        return {2, -1}; // guard,body pairs + optional else body

    case NodeKind::ChoiceSubst:
        return {1, -1};

    case NodeKind::DefinitionCall:
    case NodeKind::CallSubst:
    case NodeKind::IdList:
    case NodeKind::ExprList:
        return {0, -1};
    }
    return {0, -1};
}

bool is_expression_kind(NodeKind kind) {
    switch (kind) {
    case NodeKind::IntegerLiteral:
    case NodeKind::BooleanLiteral:
    case NodeKind::StringLiteral:
    case NodeKind::IdentifierExpr:
    case NodeKind::BuiltinSetExpr:
    case NodeKind::MinIntExpr:
    case NodeKind::MaxIntExpr:
    case NodeKind::EmptySetExpr:
    case NodeKind::SetExtensionExpr:
    case NodeKind::IntervalExpr:
    case NodeKind::EmptySeqExpr:
    case NodeKind::SeqExtensionExpr:
    case NodeKind::AddExpr:
    case NodeKind::MinusOrSetSubtractExpr:
    case NodeKind::MultOrCartExpr:
    case NodeKind::MultExpr:
    case NodeKind::CartExpr:
    case NodeKind::DivExpr:
    case NodeKind::ModExpr:
    case NodeKind::PowerExpr:
    case NodeKind::UnaryMinusExpr:
    case NodeKind::SuccExpr:
    case NodeKind::PredExpr:
    case NodeKind::PowSubsetsExpr:
    case NodeKind::Pow1SubsetsExpr:
    case NodeKind::FinSubsetsExpr:
    case NodeKind::UnionExpr:
    case NodeKind::InterExpr:
    case NodeKind::CardExpr:
    case NodeKind::MinExpr:
    case NodeKind::MaxExpr:
    case NodeKind::RelationSetExpr:
    case NodeKind::MapletExpr:
    case NodeKind::DomainExpr:
    case NodeKind::RangeExpr:
    case NodeKind::InverseExpr:
    case NodeKind::ImageExpr:
    case NodeKind::CompositionExpr:
    case NodeKind::OverrideExpr:
    case NodeKind::DomRestrictExpr:
    case NodeKind::RanRestrictExpr:
    case NodeKind::DomSubtractExpr:
    case NodeKind::RanSubtractExpr:
    case NodeKind::PartialFnExpr:
    case NodeKind::TotalFnExpr:
    case NodeKind::PartialInjExpr:
    case NodeKind::TotalInjExpr:
    case NodeKind::PartialSurjExpr:
    case NodeKind::TotalSurjExpr:
    case NodeKind::TotalBijExpr:
    case NodeKind::ApplicationExpr:
    case NodeKind::SeqSizeExpr:
    case NodeKind::SeqConcatExpr:
    case NodeKind::SeqFirstExpr:
    case NodeKind::SeqLastExpr:
    case NodeKind::SeqFrontExpr:
    case NodeKind::SeqTailExpr:
    case NodeKind::ComprehensionSetExpr:
    case NodeKind::LambdaExpr:
    case NodeKind::BoolCastExpr:
        return true;
    default:
        return false;
    }
}

bool is_predicate_kind(NodeKind kind) {
    switch (kind) {
    case NodeKind::ConjunctPredicate:
    case NodeKind::DisjunctPredicate:
    case NodeKind::ImplicationPredicate:
    case NodeKind::EquivalencePredicate:
    case NodeKind::NegationPredicate:
    case NodeKind::ForallPredicate:
    case NodeKind::ExistsPredicate:
    case NodeKind::EqualPredicate:
    case NodeKind::NotEqualPredicate:
    case NodeKind::LessPredicate:
    case NodeKind::LessEqualPredicate:
    case NodeKind::GreaterPredicate:
    case NodeKind::GreaterEqualPredicate:
    case NodeKind::MemberPredicate:
    case NodeKind::NotMemberPredicate:
    case NodeKind::SubsetPredicate:
    case NodeKind::StrictSubsetPredicate:
        return true;
    default:
        return false;
    }
}

bool is_substitution_kind(NodeKind kind) {
    switch (kind) {
    case NodeKind::SkipSubst:
    case NodeKind::AssignSubst:
    case NodeKind::BecomesElementSubst:
    case NodeKind::BecomesSuchThatSubst:
    case NodeKind::BlockSubst:
    case NodeKind::PreconditionSubst:
    case NodeKind::IfSubst:
    case NodeKind::SelectSubst:
    case NodeKind::ChoiceSubst:
    case NodeKind::AnySubst:
    case NodeKind::SequenceSubst:
    case NodeKind::ParallelSubst:
    case NodeKind::CallSubst:
        return true;
    default:
        return false;
    }
}

AstNode make_int(BInt value) {
    AstNode n(NodeKind::IntegerLiteral);
    n.number = std::move(value);
    return n;
}

AstNode make_bool(bool value) {
    AstNode n(NodeKind::BooleanLiteral);
    n.flag = value;
    return n;
}

AstNode make_ident(std::string name) {
    AstNode n(NodeKind::IdentifierExpr);
    n.text = std::move(name);
    return n;
}

AstNode make_node(NodeKind kind, std::vector<AstNode> children) {
    return AstNode(kind, std::move(children));
}

bool same_tree(const AstNode& a, const AstNode& b) {
    if (a.kind != b.kind || a.text != b.text || a.number != b.number || a.flag != b.flag)
        return false;
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same_tree(a.children[i], b.children[i])) return false;
    return true;
}

namespace {

// Binder kinds introduce the names of their IdList child for the remaining children.
bool binder_kind(NodeKind kind) {
    switch (kind) {
    case NodeKind::ForallPredicate:
    case NodeKind::ExistsPredicate:
    case NodeKind::ComprehensionSetExpr:
    case NodeKind::LambdaExpr:
    case NodeKind::AnySubst:
        return true;
    default:
        return false;
    }
}

void collect_free(const AstNode& node, std::set<std::string>& bound,
                  std::vector<std::string>& out, std::set<std::string>& seen) {
    if (node.kind == NodeKind::IdentifierExpr) {
        if (!bound.count(node.text) && !seen.count(node.text)) {
            seen.insert(node.text);
            out.push_back(node.text);
        }
        return;
    }
    if (binder_kind(node.kind)) {
        const AstNode& ids = node.children.front();
        std::vector<std::string> added;
        for (const AstNode& id : ids.children) {
            if (bound.insert(id.text).second) added.push_back(id.text);
        }
        for (std::size_t i = 1; i < node.children.size(); ++i)
            collect_free(node.children[i], bound, out, seen);
        for (const auto& name : added) bound.erase(name);
        return;
    }
    for (const AstNode& c : node.children) collect_free(c, bound, out, seen);
}

} // namespace

std::vector<std::string> free_identifiers(const AstNode& node) {
    std::set<std::string> bound, seen;
    std::vector<std::string> out;
    collect_free(node, bound, out, seen);
    return out;
}

bool check_arities(const AstNode& node, std::string* violation) {
    ArityRange r = node_arity(node.kind);
    int n = static_cast<int>(node.children.size());
    bool ok = n >= r.min && (r.max < 0 || n <= r.max);
    if ((node.kind == NodeKind::IfSubst || node.kind == NodeKind::SelectSubst) && n < 2)
        ok = false;
    if (!ok) {
        if (violation)
            *violation = std::string(node_kind_name(node.kind)) + " has " +
                         std::to_string(n) + " children";
        return false;
    }
    for (const AstNode& c : node.children)
        if (!check_arities(c, violation)) return false;
    return true;
}

std::vector<const AstNode*> top_level_conjuncts(const AstNode& predicate) {
    std::vector<const AstNode*> out;
    if (predicate.kind == NodeKind::ConjunctPredicate) {
        auto left = top_level_conjuncts(predicate.children[0]);
        auto right = top_level_conjuncts(predicate.children[1]);
        out.insert(out.end(), left.begin(), left.end());
        out.insert(out.end(), right.begin(), right.end());
    } else {
        out.push_back(&predicate);
    }
    return out;
}

} // namespace bcheck
