//! Character classification for the tokenizer: the emoji predicate and the
//! garbage character class.

use unicode_properties::emoji::EmojiStatus;
use unicode_properties::{GeneralCategory, UnicodeEmoji, UnicodeGeneralCategory};

/// Variation selector-16 requests emoji presentation for the base character.
const VS16: char = '\u{FE0F}';

fn has_emoji_presentation(c: char) -> bool {
    matches!(
        c.emoji_status(),
        EmojiStatus::EmojiPresentation
            | EmojiStatus::EmojiPresentationAndModifierBase
            | EmojiStatus::EmojiPresentationAndEmojiComponent
            | EmojiStatus::EmojiPresentationAndModifierAndEmojiComponent
    )
}

/// One extended grapheme cluster counts as an emoji when it carries a
/// character with default emoji presentation, or when it is forced into
/// emoji presentation by VS16.
pub fn is_emoji_cluster(cluster: &str) -> bool {
    cluster.chars().any(has_emoji_presentation) || cluster.chars().any(|c| c == VS16)
}

/// Display forms of the cp1252 0x80–0x9F byte range; these show up when
/// UTF-8 bytes are misread as cp1252 (e.g. "â€¦" for an ellipsis).
const CP1252_HIGH: &[char] = &[
    '\u{20AC}', '\u{201A}', '\u{0192}', '\u{201E}', '\u{2026}', '\u{2020}', '\u{2021}',
    '\u{02C6}', '\u{2030}', '\u{0160}', '\u{2039}', '\u{0152}', '\u{017D}', '\u{2018}',
    '\u{2019}', '\u{201C}', '\u{201D}', '\u{2022}', '\u{2013}', '\u{2014}', '\u{02DC}',
    '\u{2122}', '\u{0161}', '\u{203A}', '\u{0153}', '\u{017E}', '\u{0178}',
];

/// The garbage character class: mojibake residue, replacement characters,
/// control/format characters, and combining marks. A token is deleted only
/// when every character belongs to this class, so any token carrying at
/// least one character outside it survives.
pub fn is_garbage_char(c: char) -> bool {
    if c == '\u{FFFD}' || c.is_control() {
        return true;
    }
    // Latin-1 Supplement printables (the visible half of mojibake output).
    if ('\u{00A0}'..='\u{00FF}').contains(&c) {
        return true;
    }
    if CP1252_HIGH.contains(&c) {
        return true;
    }
    matches!(
        c.general_category(),
        GeneralCategory::Format
            | GeneralCategory::NonspacingMark
            | GeneralCategory::SpacingMark
            | GeneralCategory::EnclosingMark
    )
}
