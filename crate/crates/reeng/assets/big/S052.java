public class S052 extends State {
    public void open() {
        new S046();
        if (counter > 2) {
            send("msg7");
            send("msg1");
            switch (event) {
                case EV4:
                    send("msg4");
                    new S012();
                    break;
                case EV0:
                    send("msg2");
                    new S096();
                    break;
                case EV2:
                    switch (event) {
                        case EV2:
                            send("msg4");
                            new S027();
                            update();
                            break;
                        case EV1:
                            send("msg5");
                            new S066();
                            break;
                        case EV3:
                            send("msg4");
                            break;
                    }
                    break;
            }
        }
    }

    public void close() {
        new S036();
        send("msg0");
        send("msg1");
    }

    public void start() {
        send("msg2");
    }

    public void stop() {
        if (counter > 1) {
            try {
                update();
                switch (event) {
                    case EV5:
                        new S005();
                        break;
                    case EV1:
                        new S030();
                        send("msg6");
                        new S079();
                        break;
                    case EV3:
                        log("trace");
                        log("trace");
                        break;
                    default:
                        new S098();
                        break;
                }
            } finally {
                new S030();
                send("msg4");
                new S012();
            }
        }
        send("msg5");
    }

    public void tick() {
        if (counter > 8) {
            send("msg2");
        } else {
            try {
                new S000();
                send("msg1");
            } finally {
                update();
                try {
                    send("msg4");
                    send("msg5");
                    update();
                } finally {
                    send("msg3");
                }
                switch (event) {
                    case EV1:
                        new S038();
                        break;
                }
            }
            log("trace");
        }
    }

    public void reset() {
        switch (event) {
            case EV1:
                new S058();
                break;
            case EV0:
                new S093();
                send("msg2");
                new S060();
                break;
        }
        log("trace");
        send("msg0");
    }

    public void pause() {
        update();
    }

    public void resume() {
        if (counter > 6) {
            send("msg1");
        } else {
            if (counter > 6) {
                send("msg0");
            } else {
                switch (event) {
                    case EV2:
                        update();
                        send("msg2");
                        break;
                    case EV4:
                        send("msg2");
                        break;
                }
                new Abstract2();
                send("msg0");
            }
            send("msg5");
        }
    }

    public void load() {
        update();
        if (counter > 2) {
            send("msg7");
            if (counter > 5) {
                send("msg3");
                send("msg6");
                send("msg6");
            } else {
                send("msg5");
                if (counter > 4) {
                    send("msg4");
                    send("msg0");
                } else {
                    new S097();
                }
                send("msg4");
            }
        } else {
            log("trace");
            try {
                new S078();
                log("trace");
                new S078();
            } catch (IllegalStateException e) {
                send("msg0");
                new S042();
                if (counter > 8) {
                    new S064();
                    send("msg3");
                }
            } finally {
                switch (event) {
                    case EV5:
                        new S053();
                        break;
                    case EV3:
                        send("msg6");
                        update();
                        break;
                    case EV0:
                        new S098();
                        update();
                        send("msg0");
                        break;
                }
                send("msg0");
                if (counter > 9) {
                    update();
                }
            }
        }
        try {
            send("msg3");
            new S070();
            if (counter > 2) {
                switch (event) {
                    case EV0:
                        new S006();
                        new S080();
                        log("trace");
                        break;
                    case EV5:
                        new S010();
                        break;
                    case EV4:
                        new S007();
                        break;
                    default:
                        send("msg4");
                        new S030();
                        log("trace");
                        break;
                }
            }
        } catch (TimeoutException e) {
            new S076();
            new S094();
        } finally {
            update();
            update();
        }
    }

    public void save() {
        if (counter > 8) {
            try {
                send("msg2");
                send("msg4");
            } catch (TimeoutException e) {
                new S058();
                send("msg2");
            } catch (IOException e) {
                switch (event) {
                    case EV3:
                        update();
                        break;
                }
            }
        } else {
            update();
            new S073();
        }
    }
}
