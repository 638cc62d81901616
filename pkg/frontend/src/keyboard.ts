/** Keyboard mapping: digits 1..8 toggle the category at that
 * position, Enter submits. Modified keys and keystrokes originating
 * in form fields are ignored. */

import { CATEGORIES } from "./categories.js";

export interface KeyStroke {
  key: string;
  ctrl: boolean;
  meta: boolean;
  alt: boolean;
  fromInput: boolean;
}

export type KeyAction =
  | { kind: "toggle"; index: number }
  | { kind: "submit" }
  | null;

export function actionForKey(stroke: KeyStroke): KeyAction {
  if (stroke.ctrl || stroke.meta || stroke.alt || stroke.fromInput) {
    return null;
  }
  if (stroke.key === "Enter") {
    return { kind: "submit" };
  }
  if (/^[1-8]$/.test(stroke.key)) {
    const index = Number(stroke.key) - 1;
    if (index < CATEGORIES.length) {
      return { kind: "toggle", index };
    }
  }
  return null;
}
