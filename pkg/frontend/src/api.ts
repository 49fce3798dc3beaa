import {
  BestMoveResponse,
  GameSession,
  MoveChoice,
  OutcomeResponse,
  VariantInfo,
} from './types'

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message)
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  })
  if (!resp.ok) {
    let detail = resp.statusText
    try {
      const body = await resp.json()
      if (body && body.detail) detail = String(body.detail)
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(resp.status, detail)
  }
  return resp.json() as Promise<T>
}

export class KaylesApi {
  constructor(private baseUrl: string) {}

  variants(): Promise<VariantInfo[]> {
    return request(`${this.baseUrl}/api/variants`)
  }

  outcome(variant: string, position: number[]): Promise<OutcomeResponse> {
    return request(`${this.baseUrl}/api/outcome`, {
      method: 'POST',
      body: JSON.stringify({ variant, position }),
    })
  }

  bestMove(variant: string, position: number[]): Promise<BestMoveResponse> {
    return request(`${this.baseUrl}/api/best-move`, {
      method: 'POST',
      body: JSON.stringify({ variant, position }),
    })
  }

  createGame(
    variant: string,
    position: number[],
    engineSide: 'first' | 'second' = 'second',
  ): Promise<GameSession> {
    return request(`${this.baseUrl}/api/games`, {
      method: 'POST',
      body: JSON.stringify({ variant, position, engine_side: engineSide }),
    })
  }

  getGame(id: string): Promise<GameSession> {
    return request(`${this.baseUrl}/api/games/${id}`)
  }

  playMove(id: string, move: MoveChoice[]): Promise<GameSession> {
    return request(`${this.baseUrl}/api/games/${id}/move`, {
      method: 'POST',
      body: JSON.stringify({ move }),
    })
  }
}
