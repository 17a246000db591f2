package Drawing.Shapes.coreElements;

import java.awt.Graphics;

/* A straight line between two corners of its bounding box. */
public class MyLine {

    public MyLine() {
    }

    public void draw(Graphics g) {
        g.drawLine(0, 0, 10, 10);
    }

    public int getX() {
        return 0;
    }

    public int getY() {
        return 0;
    }
}
