/** Chat view state and its pure transitions.
 *
 * The message list is append-only and the radius stays inside [0, 10]; a
 * radius change only affects utterances sent afterwards.
 */

import type { BotTurn, ChatMessage, PathStep, RccResult } from "./types.js";

export const MIN_RADIUS = 0;
export const MAX_RADIUS = 10;
export const DEFAULT_RADIUS = 3;

export interface ChatViewState {
  sessionId: string | null;
  messages: ChatMessage[];
  radius: number;
  lastRcc: RccResult | null;
  lastTurn: BotTurn | null;
  /** Path shown in the explanation panel; defaults to the last turn's. */
  selectedPath: PathStep[];
  selectedAtom: string | null;
  explanationVisible: boolean;
  busy: boolean;
}

export function initialState(): ChatViewState {
  return {
    sessionId: null,
    messages: [],
    radius: DEFAULT_RADIUS,
    lastRcc: null,
    lastTurn: null,
    selectedPath: [],
    selectedAtom: null,
    explanationVisible: true,
    busy: false,
  };
}

export function clampRadius(value: number): number {
  if (Number.isNaN(value)) return DEFAULT_RADIUS;
  return Math.min(MAX_RADIUS, Math.max(MIN_RADIUS, Math.round(value)));
}

export function withSession(state: ChatViewState, sessionId: string): ChatViewState {
  return { ...state, sessionId };
}

export function withRadius(state: ChatViewState, radius: number): ChatViewState {
  return { ...state, radius: clampRadius(radius) };
}

export function withBusy(state: ChatViewState, busy: boolean): ChatViewState {
  return { ...state, busy };
}

export function toggleExplanation(state: ChatViewState): ChatViewState {
  return { ...state, explanationVisible: !state.explanationVisible };
}

export function appendUserMessage(
  state: ChatViewState,
  text: string,
  timestamp: number,
): ChatViewState {
  const message: ChatMessage = { role: "user", text, timestamp };
  return { ...state, messages: [...state.messages, message] };
}

export function appendBotTurn(
  state: ChatViewState,
  turn: BotTurn,
  timestamp: number,
): ChatViewState {
  const message: ChatMessage = { role: "bot", text: turn.reply, timestamp, turn };
  return {
    ...state,
    messages: [...state.messages, message],
    lastRcc: turn.rcc,
    lastTurn: turn,
    selectedPath: turn.path,
    selectedAtom: turn.chosen,
  };
}

/** Stored-turn lookup for a clicked member: the path of the most recent
 * turn that chose this atom, or null when no stored turn did. */
export function pathForAtom(
  turns: Array<{ chosen: string | null; path: PathStep[] }>,
  atom: string,
): PathStep[] | null {
  for (let i = turns.length - 1; i >= 0; i -= 1) {
    if (turns[i].chosen === atom) return turns[i].path;
  }
  return null;
}

export function withSelectedPath(
  state: ChatViewState,
  atom: string,
  path: PathStep[],
): ChatViewState {
  return { ...state, selectedAtom: atom, selectedPath: path, explanationVisible: true };
}

export function appendSystemMessage(
  state: ChatViewState,
  text: string,
  timestamp: number,
): ChatViewState {
  const message: ChatMessage = { role: "system", text, timestamp };
  return { ...state, messages: [...state.messages, message] };
}
