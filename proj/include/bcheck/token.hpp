#pragma once

#include <string>
#include <vector>

#include "bcheck/span.hpp"

namespace bcheck {

enum class TokenKind {
    Integer,
    String,
    Identifier,

    // punctuation / operators
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Comma, Dot, DotDot, Semicolon, VerticalBar, DoubleBar,
    Plus, Minus, Star, StarStar, Slash, Backslash,
    SetUnion, SetInter,                       // \/  /\
    Equal, NotEqual, DefEq,                   // =  /=  ==
    Less, LessEqual, Greater, GreaterEqual,
    Implies, Equivalence,                     // =>  <=>
    Ampersand, OrKw, NotKw,
    Bang, Hash,                               // ! #
    PredicateMarker,                          // #PREDICATE
    Colon, NotColon, Assign, DoubleColon,     // : /: := ::
    SubsetOf, StrictSubsetOf,                 // <: <<:
    Maplet,                                   // |->
    Relation,                                 // <->
    PartialFn, TotalFn, PartialInj, TotalInj, // +-> --> >+> >->
    PartialSurj, TotalSurj, TotalBij,         // +->> -->> >->>
    Override,                                 // <+
    DomRestrict, RanRestrict,                 // <| |>
    DomSubtract, RanSubtract,                 // <<| |>>
    Tilde, Caret, Percent, EmptySeq,          // ~ ^ % <>

    // keywords
    KwTrue, KwFalse, KwBool,
    KwMod, KwSucc, KwPred,
    KwPow, KwPow1, KwFin,
    KwCard, KwMin, KwMax,
    KwDom, KwRan,
    KwSize, KwFirst, KwLast, KwFront, KwTail,
    KwNatural, KwNatural1, KwInteger, KwNat, KwNat1, KwInt, KwBoolSet, KwStringSet,
    KwMinInt, KwMaxInt,
    KwSkip, KwBegin, KwEnd, KwPre, KwThen, KwIf, KwElsif, KwElse,
    KwSelect, KwWhen, KwChoice, KwOr, KwAny, KwWhere,
    KwMachine, KwSets, KwConstants, KwProperties, KwVariables,
    KwInvariant, KwAssertions, KwDefinitions, KwInitialisation, KwOperations,

    EndOfInput,
};

struct Token {
    TokenKind kind = TokenKind::EndOfInput;
    std::string text;
    SourceSpan span;
};

const char* token_kind_name(TokenKind kind);

} // namespace bcheck
