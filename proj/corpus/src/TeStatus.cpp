class TeStatus {
public:
    enum State {OPEN = 1, CLOSED, LOST = 9};

    TeStatus() : m_eState(OPEN) {}

    State state() { return m_eState; }

    void set(int raw) { m_eState = (State) raw; }

private:
    State m_eState;
};
