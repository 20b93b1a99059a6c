#pragma once

#include <map>
#include <memory>
#include <string>

namespace bcheck {

// B type tree. Relations are SetType(PairType(a,b)); sequences are
// SetType(PairType(INTEGER, a)). TypeVariable only appears during inference;
// a fully resolved type contains none.
class BType {
public:
    enum class Tag {
        Integer,
        Bool,
        String,
        GivenSet,    // enumerated set, identified by name
        DeferredSet, // deferred set, identified by name
        Set,
        Pair,
        Variable,
    };

    BType() : tag_(Tag::Integer) {}

    static BType integer() { return BType(Tag::Integer); }
    static BType boolean() { return BType(Tag::Bool); }
    static BType string() { return BType(Tag::String); }
    static BType given_set(std::string name) {
        BType t(Tag::GivenSet);
        t.name_ = std::move(name);
        return t;
    }
    static BType deferred_set(std::string name) {
        BType t(Tag::DeferredSet);
        t.name_ = std::move(name);
        return t;
    }
    static BType set_of(BType elem) {
        BType t(Tag::Set);
        t.left_ = std::make_shared<BType>(std::move(elem));
        return t;
    }
    static BType pair_of(BType left, BType right) {
        BType t(Tag::Pair);
        t.left_ = std::make_shared<BType>(std::move(left));
        t.right_ = std::make_shared<BType>(std::move(right));
        return t;
    }
    static BType variable(int id) {
        BType t(Tag::Variable);
        t.var_id_ = id;
        return t;
    }

    static BType relation(BType a, BType b) {
        return set_of(pair_of(std::move(a), std::move(b)));
    }
    static BType sequence(BType elem) {
        return set_of(pair_of(integer(), std::move(elem)));
    }

    Tag tag() const { return tag_; }
    const std::string& name() const { return name_; }
    int var_id() const { return var_id_; }
    const BType& element() const { return *left_; } // Set
    const BType& left() const { return *left_; }    // Pair
    const BType& right() const { return *right_; }  // Pair

    bool is_resolved() const {
        switch (tag_) {
        case Tag::Variable: return false;
        case Tag::Set: return left_->is_resolved();
        case Tag::Pair: return left_->is_resolved() && right_->is_resolved();
        default: return true;
        }
    }

    bool contains_variable(int id) const {
        switch (tag_) {
        case Tag::Variable: return var_id_ == id;
        case Tag::Set: return left_->contains_variable(id);
        case Tag::Pair: return left_->contains_variable(id) || right_->contains_variable(id);
        default: return false;
        }
    }

    bool operator==(const BType& o) const {
        if (tag_ != o.tag_) return false;
        switch (tag_) {
        case Tag::GivenSet:
        case Tag::DeferredSet: return name_ == o.name_;
        case Tag::Variable: return var_id_ == o.var_id_;
        case Tag::Set: return *left_ == *o.left_;
        case Tag::Pair: return *left_ == *o.left_ && *right_ == *o.right_;
        default: return true;
        }
    }
    bool operator!=(const BType& o) const { return !(*this == o); }

    // Rendering used in diagnostics: POW(T) for sets, A*B for pairs.
    std::string to_string() const {
        switch (tag_) {
        case Tag::Integer: return "INTEGER";
        case Tag::Bool: return "BOOL";
        case Tag::String: return "STRING";
        case Tag::GivenSet:
        case Tag::DeferredSet: return name_;
        case Tag::Set: return "POW(" + left_->to_string() + ")";
        case Tag::Pair: {
            auto side = [](const BType& t) {
                return t.tag_ == Tag::Pair ? "(" + t.to_string() + ")" : t.to_string();
            };
            return side(*left_) + "*" + side(*right_);
        }
        case Tag::Variable: return "?" + std::to_string(var_id_);
        }
        return "?";
    }

private:
    explicit BType(Tag tag) : tag_(tag) {}

    Tag tag_;
    std::string name_;
    int var_id_ = -1;
    std::shared_ptr<BType> left_, right_;
};

} // namespace bcheck
