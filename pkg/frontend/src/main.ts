/** DOM bootstrap: wires the input, radius slider and panels to the API. */

import { ApiError, createSession, getSession, sendUtterance } from "./api.js";
import {
  appendBotTurn,
  appendSystemMessage,
  appendUserMessage,
  ChatViewState,
  initialState,
  pathForAtom,
  toggleExplanation,
  withBusy,
  withRadius,
  withSelectedPath,
  withSession,
} from "./state.js";
import { renderMessages, renderPath, renderRccPanel } from "./render.js";
import type { PathStep } from "./types.js";

const BASE_URL = "";

let state: ChatViewState = initialState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function redraw(): void {
  el("messages").innerHTML = renderMessages(state.messages);
  el("rcc-panel").innerHTML = renderRccPanel(
    state.lastRcc,
    state.lastTurn?.chosen ?? null,
  );
  el("path-panel").innerHTML = renderPath(
    state.selectedPath,
    state.explanationVisible,
  );
  el<HTMLInputElement>("utterance").disabled = state.busy;
  el<HTMLButtonElement>("send").disabled = state.busy;
  el("radius-value").textContent = String(state.radius);
  const messages = el("messages");
  messages.scrollTop = messages.scrollHeight;
}

function update(next: ChatViewState): void {
  state = next;
  redraw();
}

async function ensureSession(): Promise<string> {
  if (state.sessionId) return state.sessionId;
  const sessionId = await createSession(BASE_URL);
  update(withSession(state, sessionId));
  return sessionId;
}

async function submit(): Promise<void> {
  const input = el<HTMLInputElement>("utterance");
  const text = input.value.trim();
  if (!text || state.busy) return;
  input.value = "";
  update(withBusy(appendUserMessage(state, text, Date.now()), true));
  try {
    const sessionId = await ensureSession();
    const turn = await sendUtterance(BASE_URL, sessionId, text, state.radius);
    update(withBusy(appendBotTurn(state, turn, Date.now()), false));
  } catch (err) {
    const text =
      err instanceof ApiError
        ? `${err.status === 422 ? "" : `error ${err.status}: `}${err.message}`
        : `network error: ${String(err)}`;
    update(withBusy(appendSystemMessage(state, text, Date.now()), false));
  }
}

async function showMemberPath(atom: string): Promise<void> {
  if (!state.sessionId) return;
  try {
    const session = (await getSession(BASE_URL, state.sessionId)) as {
      turns: Array<{ chosen: string | null; path: PathStep[] }>;
    };
    const path = pathForAtom(session.turns, atom);
    if (path === null) {
      update(appendSystemMessage(state, `no stored path for ${atom}`, Date.now()));
    } else {
      update(withSelectedPath(state, atom, path));
    }
  } catch (err) {
    update(appendSystemMessage(state, `network error: ${String(err)}`, Date.now()));
  }
}

function start(): void {
  el<HTMLButtonElement>("send").addEventListener("click", () => void submit());
  el<HTMLInputElement>("utterance").addEventListener("keydown", (event) => {
    if (event.key === "Enter") void submit();
  });
  const slider = el<HTMLInputElement>("radius");
  slider.addEventListener("input", () => {
    update(withRadius(state, Number(slider.value)));
  });
  el<HTMLButtonElement>("toggle-path").addEventListener("click", () => {
    update(toggleExplanation(state));
  });
  el("rcc-panel").addEventListener("click", (event) => {
    const row = (event.target as HTMLElement).closest("tr[data-atom]");
    const atom = row?.getAttribute("data-atom");
    if (atom) void showMemberPath(atom);
  });
  redraw();
}

document.addEventListener("DOMContentLoaded", start);
