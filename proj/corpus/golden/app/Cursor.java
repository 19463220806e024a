package app;

import java.io.Closeable;

public class Cursor implements Closeable {
    private String m_sQuery;
    private int m_iPos;

    public Cursor(String query) {
        m_sQuery = query;
        m_iPos = 0;
    }

    @Override
    public void close() {
        m_iPos = -1;
    }

    public boolean next() {
        m_iPos++;
        return m_iPos < 3;
    }

    public int value() {
        return m_iPos;
    }
}
