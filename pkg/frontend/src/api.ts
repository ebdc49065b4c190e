/** Thin typed client over the service HTTP API. The UI talks to the server
 * exclusively through these calls. */

import type { BotTurn } from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let detail = response.statusText;
  try {
    const body = await response.json();
    if (typeof body.detail === "string") detail = body.detail;
  } catch {
    // keep the status text
  }
  return new ApiError(detail, response.status);
}

export async function createSession(
  baseUrl: string,
  user = "john",
): Promise<string> {
  const response = await fetch(`${baseUrl}/sessions`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ user }),
  });
  if (!response.ok) throw await parseError(response);
  const body = await response.json();
  return body.session_id as string;
}

export async function sendUtterance(
  baseUrl: string,
  sessionId: string,
  text: string,
  radius: number,
): Promise<BotTurn> {
  const response = await fetch(`${baseUrl}/sessions/${sessionId}/utterance`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ text, radius }),
  });
  if (!response.ok) throw await parseError(response);
  return (await response.json()) as BotTurn;
}

export async function getSession(
  baseUrl: string,
  sessionId: string,
): Promise<unknown> {
  const response = await fetch(`${baseUrl}/sessions/${sessionId}`);
  if (!response.ok) throw await parseError(response);
  return response.json();
}
