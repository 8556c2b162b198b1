public class S067 extends Abstract5 {
    public void open() {
        if (counter > 8) {
            try {
                if (counter > 1) {
                    send("msg7");
                    send("msg3");
                    update();
                }
                switch (event) {
                    case EV1:
                        send("msg7");
                        break;
                    case EV2:
                        send("msg6");
                        new S044();
                        break;
                    default:
                        send("msg2");
                        break;
                }
            } finally {
                send("msg0");
                send("msg5");
                send("msg5");
            }
            send("msg6");
        }
    }

    public void close() {
        if (counter > 4) {
            send("msg7");
            send("msg6");
        } else {
            send("msg3");
        }
    }

    public void start() {
        send("msg2");
    }

    public void stop() {
        send("msg3");
        if (counter > 6) {
            new S066();
        } else {
            send("msg2");
            log("trace");
        }
        update();
    }

    public void tick() {
        try {
            new S000();
            new S079();
            switch (event) {
                case EV3:
                    log("trace");
                    update();
                    break;
                case EV0:
                    update();
                    break;
                case EV1:
                    new S033();
                    break;
            }
        } finally {
            send("msg3");
            new S085();
        }
    }

    public void reset() {
        if (counter > 4) {
            send("msg1");
            switch (event) {
                case EV1:
                    try {
                        new Abstract3();
                        send("msg3");
                    } catch (IOException e) {
                        update();
                        send("msg7");
                        send("msg1");
                    } finally {
                        new S067();
                        send("msg4");
                    }
                    new S035();
                    break;
                case EV2:
                    log("trace");
                    new Abstract0();
                    send("msg5");
                    break;
            }
            switch (event) {
                case EV2:
                    try {
                        new S035();
                        send("msg4");
                        log("trace");
                    } finally {
                        new Abstract3();
                        send("msg0");
                    }
                    new S012();
                    break;
                default:
                    try {
                        send("msg7");
                    } finally {
                        new S095();
                        send("msg6");
                    }
                    switch (event) {
                        case EV0:
                            send("msg2");
                            break;
                        case EV3:
                            log("trace");
                            new S070();
                            new S070();
                            break;
                    }
                    break;
            }
        } else {
            send("msg6");
            new Abstract9();
        }
        if (counter > 8) {
            new S093();
            send("msg0");
        }
    }

    public void pause() {
        switch (event) {
            case EV2:
                new S026();
                new S086();
                break;
        }
        if (counter > 7) {
            switch (event) {
                case EV5:
                    new S073();
                    send("msg4");
                    try {
                        send("msg0");
                        update();
                        send("msg3");
                    } catch (IOException e) {
                        send("msg4");
                    }
                    break;
            }
        } else {
            new S000();
            new S082();
            send("msg5");
        }
        send("msg0");
    }

    public void resume() {
        new S006();
    }

    public void load() {
        send("msg0");
        if (counter > 1) {
            send("msg0");
            new S072();
        }
    }

    public void save() {
        new S016();
    }
}
