/** The eight variation categories, in server order.
 *
 * `value` strings are the API's category identifiers; the digit key
 * 1..8 toggles the category at that position.
 */

export interface CategoryInfo {
  value: string;
  label: string;
  hint: string;
}

export const CATEGORIES: readonly CategoryInfo[] = [
  {
    value: "word_to_word",
    label: "Word-to-word synonym",
    hint: "one word replaced by a synonymous word",
  },
  {
    value: "word_to_phrase",
    label: "Word-to-phrase synonym",
    hint: "one word replaced by a phrase with the same meaning",
  },
  {
    value: "phrase_to_phrase",
    label: "Phrase-to-phrase synonym",
    hint: "a whole phrase replaced by an equivalent phrase",
  },
  {
    value: "redundancy_verbosity",
    label: "Redundancy or verbosity",
    hint: "one side carries extra words the meaning does not need",
  },
  {
    value: "explicit_pronouns",
    label: "Explicit pronouns",
    hint: "a pronoun spelled out where verb inflection already shows it",
  },
  {
    value: "emphasizer",
    label: "Emphasizer",
    hint: "an added emphasis word strengthens one side",
  },
  {
    value: "figurative_idiom",
    label: "Figurative language / idiom",
    hint: "an idiom or figurative turn on one side",
  },
  {
    value: "uncertainty_hedging",
    label: "Uncertainty or hedging",
    hint: "both sides hedge, with different uncertainty markers",
  },
];

export const CATEGORY_VALUES: readonly string[] = CATEGORIES.map((c) => c.value);

export function isCategoryValue(value: string): boolean {
  return CATEGORY_VALUES.includes(value);
}
